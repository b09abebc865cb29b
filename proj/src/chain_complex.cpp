#include "ipmod/chain_complex.hpp"

#include <set>

namespace ipmod::chain {

namespace {

// Incremental basis of a subspace with distinct pivots, used to pick homology representatives.
class Reducer {
public:
    bool insert(BitVector v) {
        for (const auto& [pivot, row] : rows_) {
            if (v.get(pivot)) {
                v ^= row;
            }
        }
        if (v.is_zero()) {
            return false;
        }
        const auto pivot = v.first_set();
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<std::size_t, BitVector>> rows_;
};

// Flattened coordinates for all maps source -> target of a fixed degree.
struct MapLayout {
    struct Block {
        int n;
        std::size_t rows;
        std::size_t cols;
        std::size_t offset;
    };

    MapLayout(const GradedComplex& source, const GradedComplex& target, int degree) : degree(degree) {
        for (int n : source.support()) {
            const auto rows = target.dim(n + degree);
            if (rows == 0) {
                continue;
            }
            blocks.push_back({n, rows, source.dim(n), total});
            total += rows * source.dim(n);
        }
    }

    [[nodiscard]] const Block* find(int n) const {
        for (const auto& b : blocks) {
            if (b.n == n) {
                return &b;
            }
        }
        return nullptr;
    }

    [[nodiscard]] GradedMap unpack(const BitVector& v) const {
        GradedMap f;
        f.degree = degree;
        for (const auto& b : blocks) {
            BitMatrix m(b.rows, b.cols);
            for (std::size_t r = 0; r < b.rows; ++r) {
                for (std::size_t c = 0; c < b.cols; ++c) {
                    if (v.get(b.offset + r * b.cols + c)) {
                        m.set(r, c);
                    }
                }
            }
            f.blocks[b.n] = std::move(m);
        }
        return f;
    }

    [[nodiscard]] BitVector pack(const GradedMap& f, const GradedComplex& source,
                                 const GradedComplex& target) const {
        BitVector v(total);
        for (const auto& b : blocks) {
            const auto m = block(f, source, target, b.n);
            for (std::size_t r = 0; r < b.rows; ++r) {
                for (std::size_t c = 0; c < b.cols; ++c) {
                    if (m.get(r, c)) {
                        v.set(b.offset + r * b.cols + c);
                    }
                }
            }
        }
        return v;
    }

    int degree;
    std::vector<Block> blocks;
    std::size_t total = 0;
};

// Matrix of K |-> d'K + Kd from maps of degree k to maps of degree k - 1.
BitMatrix boundary_operator(const GradedComplex& source, const GradedComplex& target, const MapLayout& in,
                            const MapLayout& out) {
    BitMatrix op(out.total, in.total);
    const int k = in.degree;
    for (const auto& b : in.blocks) {
        const auto d_target = target.differential(b.n + k);
        const int next = source.normalize(b.n + 1);
        const auto d_source = source.differential(next);
        const auto* first = out.find(b.n);
        const auto* second = out.find(next);
        for (std::size_t l = 0; l < b.rows; ++l) {
            for (std::size_t j = 0; j < b.cols; ++j) {
                const auto var = b.offset + l * b.cols + j;
                if (first != nullptr) {
                    for (std::size_t i = 0; i < first->rows; ++i) {
                        if (d_target.get(i, l)) {
                            op.flip(first->offset + i * first->cols + j, var);
                        }
                    }
                }
                if (second != nullptr) {
                    for (std::size_t jj = 0; jj < second->cols; ++jj) {
                        if (d_source.get(j, jj)) {
                            op.flip(second->offset + l * second->cols + jj, var);
                        }
                    }
                }
            }
        }
    }
    return op;
}

std::vector<int> cone_degrees(const ChainMap& f) {
    if (f.source.period() > 0) {
        std::vector<int> all;
        for (int n = 0; n < f.source.period(); ++n) {
            all.push_back(n);
        }
        return all;
    }
    std::set<int> degrees;
    for (int n : f.source.support()) {
        degrees.insert(n);
    }
    for (int m : f.target.support()) {
        degrees.insert(m - f.map.degree - 1);
    }
    return {degrees.begin(), degrees.end()};
}

void require_same_period(const GradedComplex& a, const GradedComplex& b) {
    if (a.period() != b.period()) {
        throw std::invalid_argument("complexes have different grading periods");
    }
}

}  // namespace

GradedComplex::GradedComplex(int period) : period_(period) {
    if (period < 0) {
        throw std::invalid_argument("grading period must be non-negative");
    }
}

int GradedComplex::normalize(int degree) const {
    if (period_ == 0) {
        return degree;
    }
    return ((degree % period_) + period_) % period_;
}

std::size_t GradedComplex::dim(int degree) const {
    const auto it = dims_.find(normalize(degree));
    return it == dims_.end() ? 0 : it->second;
}

void GradedComplex::set_dim(int degree, std::size_t n) { dims_[normalize(degree)] = n; }

BitMatrix GradedComplex::differential(int degree) const {
    const int n = normalize(degree);
    const auto it = diffs_.find(n);
    if (it != diffs_.end()) {
        return it->second;
    }
    return BitMatrix(dim(n - 1), dim(n));
}

void GradedComplex::set_differential(int degree, BitMatrix m) {
    const int n = normalize(degree);
    if (m.rows() != dim(n - 1) || m.cols() != dim(n)) {
        throw chain_error("differential has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(dim(n - 1)) + "x" + std::to_string(dim(n)),
                          n);
    }
    diffs_[n] = std::move(m);
}

std::vector<int> GradedComplex::support() const {
    std::vector<int> out;
    for (const auto& [n, d] : dims_) {
        if (d > 0) {
            out.push_back(n);
        }
    }
    return out;
}

std::size_t GradedComplex::total_dim() const {
    std::size_t total = 0;
    for (const auto& [n, d] : dims_) {
        total += d;
    }
    return total;
}

void GradedComplex::validate() const {
    for (const auto& [n, m] : diffs_) {
        if (m.rows() != dim(n - 1) || m.cols() != dim(n)) {
            throw chain_error("differential shape does not match dimensions", n);
        }
    }
    for (int n : support()) {
        if (!(differential(n - 1) * differential(n)).is_zero()) {
            throw chain_error("d o d is nonzero", n);
        }
    }
}

BitMatrix block(const GradedMap& f, const GradedComplex& source, const GradedComplex& target, int n) {
    const int m = source.normalize(n);
    const auto rows = target.dim(m + f.degree);
    const auto cols = source.dim(m);
    auto it = f.blocks.find(m);
    if (it == f.blocks.end() && source.period() > 0) {
        for (it = f.blocks.begin(); it != f.blocks.end(); ++it) {
            if (source.normalize(it->first) == m) {
                break;
            }
        }
    }
    if (it == f.blocks.end()) {
        return BitMatrix(rows, cols);
    }
    if (it->second.rows() != rows || it->second.cols() != cols) {
        throw chain_error("map block has shape " + std::to_string(it->second.rows()) + "x" +
                              std::to_string(it->second.cols()) + ", expected " + std::to_string(rows) + "x" +
                              std::to_string(cols),
                          m);
    }
    return it->second;
}

void check_shapes(const GradedMap& f, const GradedComplex& source, const GradedComplex& target) {
    for (const auto& [n, m] : f.blocks) {
        (void)m;
        (void)block(f, source, target, n);
    }
}

GradedMap zero_map(int degree) {
    GradedMap f;
    f.degree = degree;
    return f;
}

GradedMap identity_map(const GradedComplex& c) {
    GradedMap f;
    for (int n : c.support()) {
        f.blocks[n] = BitMatrix::identity(c.dim(n));
    }
    return f;
}

GradedMap compose(const GradedMap& g, const GradedMap& f, const GradedComplex& a, const GradedComplex& b,
                  const GradedComplex& c) {
    GradedMap out;
    out.degree = f.degree + g.degree;
    for (int n : a.support()) {
        auto m = block(g, b, c, n + f.degree) * block(f, a, b, n);
        if (!m.empty()) {
            out.blocks[n] = std::move(m);
        }
    }
    return out;
}

GradedMap add(const GradedMap& f, const GradedMap& g, const GradedComplex& a, const GradedComplex& b) {
    if (a.normalize(f.degree) != a.normalize(g.degree)) {
        throw std::invalid_argument("cannot add maps of different degrees");
    }
    GradedMap out;
    out.degree = f.degree;
    for (int n : a.support()) {
        auto m = block(f, a, b, n) + block(g, a, b, n);
        if (!m.empty()) {
            out.blocks[n] = std::move(m);
        }
    }
    return out;
}

bool is_zero(const GradedMap& f, const GradedComplex& a, const GradedComplex& b) {
    for (int n : a.support()) {
        if (!block(f, a, b, n).is_zero()) {
            return false;
        }
    }
    return true;
}

bool equal(const GradedMap& f, const GradedMap& g, const GradedComplex& a, const GradedComplex& b) {
    return is_zero(add(f, g, a, b), a, b);
}

GradedMap boundary_of(const GradedMap& f, const GradedComplex& source, const GradedComplex& target) {
    GradedMap out;
    out.degree = f.degree - 1;
    for (int n : source.support()) {
        auto m = target.differential(n + f.degree) * block(f, source, target, n);
        m += block(f, source, target, n - 1) * source.differential(n);
        if (!m.empty()) {
            out.blocks[n] = std::move(m);
        }
    }
    return out;
}

std::optional<int> chain_map_violation(const ChainMap& f) {
    require_same_period(f.source, f.target);
    const auto b = boundary_of(f.map, f.source, f.target);
    for (const auto& [n, m] : b.blocks) {
        if (!m.is_zero()) {
            return n;
        }
    }
    return std::nullopt;
}

BitVector Homology::coordinates(const BitVector& z) const {
    const auto x = gf2::solve(cycles, z);
    if (!x) {
        throw std::invalid_argument("vector is not a cycle in degree " + std::to_string(degree));
    }
    BitVector out(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
        if (x->get(boundary_rank + k)) {
            out.set(k);
        }
    }
    return out;
}

Homology homology(const GradedComplex& c, int degree) {
    Homology h;
    h.degree = c.normalize(degree);
    const auto n = c.dim(h.degree);
    const auto boundaries = gf2::column_space_basis(c.differential(h.degree + 1));
    const auto kernel = gf2::kernel_basis(c.differential(h.degree));

    Reducer reducer;
    std::vector<BitVector> columns;
    for (const auto& b : boundaries) {
        reducer.insert(b);
        columns.push_back(b);
    }
    h.boundary_rank = columns.size();
    for (const auto& z : kernel) {
        if (reducer.insert(z)) {
            columns.push_back(z);
        }
    }
    h.dimension = columns.size() - h.boundary_rank;
    h.cycles = BitMatrix::from_columns(columns, n);
    return h;
}

std::map<int, std::size_t> homology_dims(const GradedComplex& c) {
    std::map<int, std::size_t> out;
    if (c.period() > 0) {
        for (int n = 0; n < c.period(); ++n) {
            out[n] = homology(c, n).dimension;
        }
    } else {
        for (int n : c.support()) {
            out[n] = homology(c, n).dimension;
        }
    }
    return out;
}

GradedComplex cone(const ChainMap& f) {
    if (const auto bad = chain_map_violation(f)) {
        throw chain_error("map is not a chain map", *bad);
    }
    check_shapes(f.map, f.source, f.target);
    const int a = f.map.degree;
    const auto& A = f.source;
    const auto& B = f.target;
    GradedComplex out(A.period());
    const auto degrees = cone_degrees(f);
    for (int n : degrees) {
        out.set_dim(n, A.dim(n) + B.dim(n + a + 1));
    }
    for (int n : degrees) {
        const auto rows = out.dim(n - 1);
        const auto cols = out.dim(n);
        if (rows == 0 || cols == 0) {
            continue;
        }
        BitMatrix d(rows, cols);
        const auto da = A.differential(n);
        const auto fn = block(f.map, A, B, n);
        const auto db = B.differential(n + a + 1);
        const auto a_rows = A.dim(n - 1);
        const auto a_cols = A.dim(n);
        for (std::size_t r = 0; r < da.rows(); ++r) {
            for (std::size_t c = 0; c < da.cols(); ++c) {
                if (da.get(r, c)) {
                    d.set(r, c);
                }
            }
        }
        for (std::size_t r = 0; r < fn.rows(); ++r) {
            for (std::size_t c = 0; c < fn.cols(); ++c) {
                if (fn.get(r, c)) {
                    d.set(a_rows + r, c);
                }
            }
        }
        for (std::size_t r = 0; r < db.rows(); ++r) {
            for (std::size_t c = 0; c < db.cols(); ++c) {
                if (db.get(r, c)) {
                    d.set(a_rows + r, a_cols + c);
                }
            }
        }
        out.set_differential(n, std::move(d));
    }
    return out;
}

GradedMap cone_inclusion(const ChainMap& f) {
    const int a = f.map.degree;
    GradedMap out;
    out.degree = -a - 1;
    for (int m : f.target.support()) {
        const int n = m - a - 1;
        const auto offset = f.source.dim(n);
        BitMatrix inc(offset + f.target.dim(m), f.target.dim(m));
        for (std::size_t i = 0; i < f.target.dim(m); ++i) {
            inc.set(offset + i, i);
        }
        out.blocks[m] = std::move(inc);
    }
    return out;
}

GradedMap cone_projection(const ChainMap& f) {
    const int a = f.map.degree;
    GradedMap out;
    for (int n : cone_degrees(f)) {
        const auto da = f.source.dim(n);
        const auto total = da + f.target.dim(n + a + 1);
        if (total == 0 || da == 0) {
            continue;
        }
        BitMatrix proj(da, total);
        for (std::size_t i = 0; i < da; ++i) {
            proj.set(i, i);
        }
        out.blocks[n] = std::move(proj);
    }
    return out;
}

BitMatrix induced_map(const ChainMap& f, int degree) {
    const auto ha = homology(f.source, degree);
    const auto hb = homology(f.target, degree + f.map.degree);
    const auto fn = block(f.map, f.source, f.target, degree);
    std::vector<BitVector> cols;
    for (std::size_t k = 0; k < ha.dimension; ++k) {
        cols.push_back(hb.coordinates(fn.apply(ha.representative(k))));
    }
    return BitMatrix::from_columns(cols, hb.dimension);
}

std::optional<GradedMap> find_nullhomotopy(const GradedComplex& source, const GradedComplex& target,
                                           const GradedMap& r) {
    require_same_period(source, target);
    const MapLayout in(source, target, r.degree + 1);
    const MapLayout out(source, target, r.degree);
    const auto op = boundary_operator(source, target, in, out);
    const auto x = gf2::solve(op, out.pack(r, source, target));
    if (!x) {
        return std::nullopt;
    }
    return in.unpack(*x);
}

std::vector<GradedMap> chain_map_basis(const GradedComplex& source, const GradedComplex& target, int degree) {
    require_same_period(source, target);
    const MapLayout in(source, target, degree);
    const MapLayout out(source, target, degree - 1);
    std::vector<GradedMap> basis;
    for (const auto& v : gf2::kernel_basis(boundary_operator(source, target, in, out))) {
        basis.push_back(in.unpack(v));
    }
    return basis;
}

GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b) {
    require_same_period(a, b);
    GradedComplex out(a.period());
    std::set<int> degrees;
    for (int n : a.support()) {
        degrees.insert(n);
    }
    for (int n : b.support()) {
        degrees.insert(n);
    }
    for (int n : degrees) {
        out.set_dim(n, a.dim(n) + b.dim(n));
    }
    for (int n : degrees) {
        const auto rows = out.dim(n - 1);
        if (rows == 0) {
            continue;
        }
        BitMatrix d(rows, out.dim(n));
        const auto da = a.differential(n);
        const auto db = b.differential(n);
        for (std::size_t r = 0; r < da.rows(); ++r) {
            for (std::size_t c = 0; c < da.cols(); ++c) {
                if (da.get(r, c)) {
                    d.set(r, c);
                }
            }
        }
        for (std::size_t r = 0; r < db.rows(); ++r) {
            for (std::size_t c = 0; c < db.cols(); ++c) {
                if (db.get(r, c)) {
                    d.set(da.rows() + r, da.cols() + c);
                }
            }
        }
        out.set_differential(n, std::move(d));
    }
    return out;
}

GradedComplex collapse(const GradedComplex& c, int new_period) {
    if (new_period <= 0 || (c.period() > 0 && c.period() % new_period != 0)) {
        throw std::invalid_argument("collapse period must be positive and divide the original period");
    }
    GradedComplex out(new_period);
    std::map<int, std::size_t> offset;
    std::map<int, std::size_t> fill;
    for (int n : c.support()) {
        const int m = out.normalize(n);
        offset[n] = fill[m];
        fill[m] += c.dim(n);
    }
    for (const auto& [m, d] : fill) {
        out.set_dim(m, d);
    }
    std::map<int, BitMatrix> diffs;
    for (int m = 0; m < new_period; ++m) {
        if (out.dim(m) > 0 && out.dim(m - 1) > 0) {
            diffs.emplace(m, BitMatrix(out.dim(m - 1), out.dim(m)));
        }
    }
    for (int n : c.support()) {
        const int below = c.normalize(n - 1);
        if (c.dim(below) == 0) {
            continue;
        }
        const auto d = c.differential(n);
        auto& target = diffs.at(out.normalize(n));
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t col = 0; col < d.cols(); ++col) {
                if (d.get(r, col)) {
                    target.set(offset.at(below) + r, offset.at(n) + col);
                }
            }
        }
    }
    for (auto& [m, d] : diffs) {
        out.set_differential(m, std::move(d));
    }
    return out;
}

}  // namespace ipmod::chain
