#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

Int gcd(const Int& a, const Int& b) {
    Int x = abs(a), y = abs(b);
    while (y != 0) {
        Int r = x % y;
        x = y;
        y = r;
    }
    return x;
}

Int vector_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

Rat rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q); // d > 0
    Int f = n / d;
    if (n % d != 0 && n < 0) f -= 1;
    return Rat(f);
}

Rat rat_ceil(const Rat& q) { return -rat_floor(-q); }

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_scale(const Int& c, const IntVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<size_t>(rows) * cols)
        throw InternalError("IntMatrix: data size does not match shape");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw InternalError("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(int r) const {
    IntVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

IntVec IntMatrix::col(int c) const {
    IntVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("IntMatrix: shape mismatch in product");
    IntMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InternalError("IntMatrix: shape mismatch in apply");
    IntVec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& factor) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& factor) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw InternalError("determinant: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

int rank(const IntMatrix& a) {
    // Gaussian elimination over Q; sizes are small throughout the library.
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = Rat(a.at(i, j));
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw InternalError("inverse_unimodular: matrix not square");
    const int n = a.rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
        m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) throw InternalError("inverse_unimodular: singular matrix");
        std::swap(m[c], m[piv]);
        Rat p = m[c][c];
        for (int j = 0; j < 2 * n; ++j) m[c][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& q = m[i][n + j];
            if (denominator(q) != 1) throw InternalError("inverse_unimodular: matrix is not unimodular");
            inv.at(i, j) = numerator(q);
        }
    return inv;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    int n = std::min(s.rows(), s.cols());
    for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
    return d;
}

namespace {

// Location of the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (from, from); false if that submatrix is zero.
bool locate_pivot(const IntMatrix& s, int from, int& r_out, int& c_out) {
    bool found = false;
    Int best = 0;
    for (int r = from; r < s.rows(); ++r)
        for (int c = from; c < s.cols(); ++c) {
            const Int& x = s.at(r, c);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                r_out = r;
                c_out = c;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    SmithDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& s = d.s;
    const int nmin = std::min(m, n);

    for (int i = 0; i < nmin; ++i) {
        for (;;) {
            int pr, pc;
            if (!locate_pivot(s, i, pr, pc)) break; // trailing submatrix is zero
            if (pr != i) { s.swap_rows(i, pr); d.u.swap_rows(i, pr); }
            if (pc != i) { s.swap_cols(i, pc); d.v.swap_cols(i, pc); }

            bool clean = true;
            for (int r = i + 1; r < m; ++r) {
                if (s.at(r, i) == 0) continue;
                Int q = s.at(r, i) / s.at(i, i); // truncated: remainder < |pivot|
                s.add_row_multiple(r, i, -q);
                d.u.add_row_multiple(r, i, -q);
                if (s.at(r, i) != 0) clean = false;
            }
            for (int c = i + 1; c < n; ++c) {
                if (s.at(i, c) == 0) continue;
                Int q = s.at(i, c) / s.at(i, i);
                s.add_col_multiple(c, i, -q);
                d.v.add_col_multiple(c, i, -q);
                if (s.at(i, c) != 0) clean = false;
            }
            if (!clean) continue; // smaller entries appeared, re-pivot

            // Divisibility chain: the pivot must divide the rest.
            bool fixed = true;
            for (int r = i + 1; r < m && fixed; ++r)
                for (int c = i + 1; c < n && fixed; ++c)
                    if (s.at(r, c) % s.at(i, i) != 0) {
                        s.add_row_multiple(i, r, 1);
                        d.u.add_row_multiple(i, r, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.at(i, i) < 0) {
            s.negate_row(i);
            d.u.negate_row(i);
        }
    }
    return d;
}

std::optional<IntegerSolution> solve_integer_system(const IntMatrix& a, const IntVec& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw ValidationError("solve_integer_system: right-hand side length does not match row count");
    const int m = a.rows(), n = a.cols();
    SmithDecomposition d = smith_normal_form(a);
    IntVec c = d.u.apply(b);

    int t = 0;
    while (t < std::min(m, n) && d.s.at(t, t) != 0) ++t;

    IntVec y(n, 0);
    for (int i = 0; i < t; ++i) {
        if (c[i] % d.s.at(i, i) != 0) return std::nullopt;
        y[i] = c[i] / d.s.at(i, i);
    }
    for (int i = t; i < m; ++i)
        if (c[i] != 0) return std::nullopt;

    IntegerSolution sol;
    sol.particular = d.v.apply(y);
    for (int j = t; j < n; ++j) sol.kernel_basis.push_back(d.v.col(j));
    return sol;
}

void HalfspaceSystem::add_le(IntVec coeffs, Int bound) {
    inequalities.push_back({std::move(coeffs), std::move(bound)});
}

void HalfspaceSystem::add_ge(IntVec coeffs, Int bound) {
    for (Int& x : coeffs) x = -x;
    inequalities.push_back({std::move(coeffs), -bound});
}

void HalfspaceSystem::add_eq(IntVec coeffs, Int bound) {
    equalities.push_back({std::move(coeffs), std::move(bound)});
}

namespace {

struct Ineq {
    IntVec a;
    Int b;

    bool operator<(const Ineq& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    bool operator==(const Ineq& o) const = default;
};

void normalize_ineq(Ineq& q) {
    Int g = gcd(vector_gcd(q.a), q.b);
    if (g > 1) {
        for (Int& x : q.a) x /= g;
        q.b /= g;
    }
}

// Equalities split into opposite inequalities; <a,x> <= b form throughout.
std::vector<Ineq> split_system(const HalfspaceSystem& sys) {
    std::vector<Ineq> out;
    for (const auto& c : sys.inequalities) {
        if (static_cast<int>(c.coeffs.size()) != sys.dim)
            throw ValidationError("halfspace system: constraint length does not match dimension");
        out.push_back({c.coeffs, c.bound});
    }
    for (const auto& c : sys.equalities) {
        if (static_cast<int>(c.coeffs.size()) != sys.dim)
            throw ValidationError("halfspace system: constraint length does not match dimension");
        out.push_back({c.coeffs, c.bound});
        IntVec neg = c.coeffs;
        for (Int& x : neg) x = -x;
        out.push_back({std::move(neg), -c.bound});
    }
    return out;
}

// Drops constant rows (detecting infeasibility), normalizes, deduplicates.
// nullopt = the system has no rational solution.
std::optional<std::vector<Ineq>> compress(std::vector<Ineq> list) {
    std::vector<Ineq> out;
    for (Ineq& q : list) {
        if (is_zero_vec(q.a)) {
            if (q.b < 0) return std::nullopt;
            continue;
        }
        normalize_ineq(q);
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Fourier-Motzkin elimination of variable k.
std::vector<Ineq> eliminate_variable(const std::vector<Ineq>& list, int k) {
    std::vector<const Ineq*> pos, neg;
    std::vector<Ineq> out;
    for (const Ineq& q : list) {
        if (q.a[k] > 0) pos.push_back(&q);
        else if (q.a[k] < 0) neg.push_back(&q);
        else out.push_back(q);
    }
    for (const Ineq* p : pos)
        for (const Ineq* q : neg) {
            Int mp = -q->a[k]; // > 0
            Int mq = p->a[k];  // > 0
            Ineq comb;
            comb.a.resize(p->a.size());
            for (size_t j = 0; j < p->a.size(); ++j) comb.a[j] = mp * p->a[j] + mq * q->a[j];
            comb.b = mp * p->b + mq * q->b;
            out.push_back(std::move(comb));
        }
    return out;
}

// Projects the system onto coordinate j, eliminating the others in the
// given relative order.  nullopt = infeasible.
std::optional<CoordinateInterval> project_to_coordinate(const HalfspaceSystem& sys, int j,
                                                        const std::vector<int>& order) {
    auto list = compress(split_system(sys));
    if (!list) return std::nullopt;
    for (int k : order) {
        if (k == j) continue;
        list = compress(eliminate_variable(*list, k));
        if (!list) return std::nullopt;
    }
    CoordinateInterval iv;
    for (const Ineq& q : *list) {
        // Only coordinate j survives.
        Rat bound = Rat(q.b) / Rat(q.a[j]);
        if (q.a[j] > 0) {
            if (!iv.upper || bound < *iv.upper) iv.upper = bound;
        } else {
            if (!iv.lower || bound > *iv.lower) iv.lower = bound;
        }
    }
    if (iv.lower && iv.upper && *iv.lower > *iv.upper) return std::nullopt;
    return iv;
}

} // namespace

namespace detail {

CoordinateBounds coordinate_bounds_ordered(const HalfspaceSystem& sys, const std::vector<int>& order) {
    CoordinateBounds out;
    out.intervals.resize(sys.dim);
    if (sys.dim == 0) {
        out.empty = !compress(split_system(sys)).has_value();
        return out;
    }
    for (int j = 0; j < sys.dim; ++j) {
        auto iv = project_to_coordinate(sys, j, order);
        if (!iv) {
            out.empty = true;
            out.intervals.clear();
            out.intervals.resize(sys.dim);
            return out;
        }
        out.intervals[j] = *iv;
    }
    return out;
}

} // namespace detail

CoordinateBounds coordinate_bounds(const HalfspaceSystem& sys) {
    std::vector<int> order(sys.dim);
    for (int i = 0; i < sys.dim; ++i) order[i] = i;
    return detail::coordinate_bounds_ordered(sys, order);
}

bool rational_feasible(const HalfspaceSystem& sys) {
    auto list = compress(split_system(sys));
    if (!list) return false;
    for (int k = 0; k < sys.dim; ++k) {
        list = compress(eliminate_variable(*list, k));
        if (!list) return false;
    }
    return true;
}

namespace {

// Drops coordinate 0 after fixing it to value c.
std::vector<Ineq> substitute_first(const std::vector<Ineq>& list, const Int& c) {
    std::vector<Ineq> out;
    out.reserve(list.size());
    for (const Ineq& q : list) {
        Ineq r;
        r.a.assign(q.a.begin() + 1, q.a.end());
        r.b = q.b - q.a[0] * c;
        out.push_back(std::move(r));
    }
    return out;
}

// Exact range of the first remaining coordinate; nullopt = infeasible.
std::optional<CoordinateInterval> first_coordinate_range(const std::vector<Ineq>& list, int dim) {
    auto compressed = compress(list);
    if (!compressed) return std::nullopt;
    auto work = *compressed;
    for (int k = 1; k < dim; ++k) {
        auto next = compress(eliminate_variable(work, k));
        if (!next) return std::nullopt;
        work = *next;
    }
    CoordinateInterval iv;
    for (const Ineq& q : work) {
        Rat bound = Rat(q.b) / Rat(q.a[0]);
        if (q.a[0] > 0) {
            if (!iv.upper || bound < *iv.upper) iv.upper = bound;
        } else {
            if (!iv.lower || bound > *iv.lower) iv.lower = bound;
        }
    }
    if (iv.lower && iv.upper && *iv.lower > *iv.upper) return std::nullopt;
    return iv;
}

// Depth-first enumeration in lexicographic order.  stop_at_first turns the
// search into an existence test.
bool enumerate_points(const std::vector<Ineq>& list, int dim, IntVec& prefix,
                      std::vector<IntVec>* out, bool stop_at_first) {
    if (dim == 0) {
        for (const Ineq& q : list)
            if (q.b < 0) return false;
        if (out) out->push_back(prefix);
        return true;
    }
    auto iv = first_coordinate_range(list, dim);
    if (!iv) return false;
    if (!iv->lower || !iv->upper)
        throw UnboundedError("lattice_points: solution set is unbounded");
    Int lo = numerator(rat_ceil(*iv->lower));
    Int hi = numerator(rat_floor(*iv->upper));
    bool found = false;
    for (Int c = lo; c <= hi; ++c) {
        prefix.push_back(c);
        bool hit = enumerate_points(substitute_first(list, c), dim - 1, prefix, out, stop_at_first);
        prefix.pop_back();
        found = found || hit;
        if (hit && stop_at_first) return true;
    }
    return found;
}

} // namespace

std::vector<IntVec> lattice_points(const HalfspaceSystem& sys) {
    CoordinateBounds bounds = coordinate_bounds(sys);
    if (bounds.empty) return {};
    for (const auto& iv : bounds.intervals)
        if (!iv.lower || !iv.upper)
            throw UnboundedError("lattice_points: solution set is unbounded");
    std::vector<IntVec> out;
    IntVec prefix;
    enumerate_points(split_system(sys), sys.dim, prefix, &out, false);
    return out;
}

bool has_lattice_point(const HalfspaceSystem& sys) {
    CoordinateBounds bounds = coordinate_bounds(sys);
    if (bounds.empty) return false;
    for (const auto& iv : bounds.intervals)
        if (!iv.lower || !iv.upper)
            throw UnboundedError("has_lattice_point: solution set is unbounded");
    IntVec prefix;
    return enumerate_points(split_system(sys), sys.dim, prefix, nullptr, true);
}

} // namespace toric
