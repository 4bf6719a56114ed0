#include "bruns/matrix.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bruns {

FreeModuleSpec::FreeModuleSpec(int r, std::vector<int> degs) : rank(r), degrees(std::move(degs)) {
    if (static_cast<int>(degrees->size()) != rank)
        throw error("degree list length does not match rank");
}

IdealData::IdealData(Ring r, std::vector<Polynomial> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& h : generators)
            if (h == g) {
                dup = true;
                break;
            }
        if (!dup) generators.push_back(std::move(g));
    }
}

bool IdealData::contains_unit() const {
    for (const auto& g : generators)
        if (g.is_unit()) return true;
    return false;
}

PolyMatrix::PolyMatrix(Ring ring, FreeModuleSpec source, FreeModuleSpec target)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)),
      entries_(static_cast<size_t>(source_.rank) * target_.rank, Polynomial::zero(ring_)) {}

PolyMatrix::PolyMatrix(Ring ring, FreeModuleSpec source, FreeModuleSpec target,
                       std::vector<Polynomial> entries)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)),
      entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(source_.rank) * target_.rank)
        throw error("matrix entry count does not match specs");
}

PolyMatrix PolyMatrix::identity(const Ring& ring, const FreeModuleSpec& spec) {
    PolyMatrix m(ring, spec, spec);
    for (int i = 0; i < spec.rank; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::zero(const Ring& ring, const FreeModuleSpec& source,
                            const FreeModuleSpec& target) {
    return PolyMatrix(ring, source, target);
}

std::vector<Polynomial> PolyMatrix::column(int j) const {
    std::vector<Polynomial> c;
    c.reserve(rows());
    for (int i = 0; i < rows(); ++i) c.push_back(at(i, j));
    return c;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_graded_consistent() const {
    if (!source_.graded() || !target_.graded()) return false;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const auto& e = at(i, j);
            if (e.is_zero()) continue;
            int d;
            if (!e.is_homogeneous(&d)) return false;
            if (d != (*source_.degrees)[j] - (*target_.degrees)[i]) return false;
        }
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows() == o.rows() && cols() == o.cols() && entries_ == o.entries_;
}

void PolyMatrix::set_source_degrees(std::vector<int> degs) {
    if (static_cast<int>(degs.size()) != source_.rank)
        throw error("degree list length does not match rank");
    source_.degrees = std::move(degs);
}

void PolyMatrix::set_target_degrees(std::vector<int> degs) {
    if (static_cast<int>(degs.size()) != target_.rank)
        throw error("degree list length does not match rank");
    target_.degrees = std::move(degs);
}

PolyMatrix compose(const PolyMatrix& f, const PolyMatrix& g) {
    if (f.cols() != g.rows()) throw error("compose: dimension mismatch");
    PolyMatrix r(f.ring(), g.source(), f.target());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            Polynomial acc = Polynomial::zero(f.ring());
            for (int k = 0; k < f.cols(); ++k) {
                if (f.at(i, k).is_zero() || g.at(k, j).is_zero()) continue;
                acc = acc + f.at(i, k) * g.at(k, j);
            }
            r.at(i, j) = std::move(acc);
        }
    return r;
}

PolyMatrix dual(const PolyMatrix& f) {
    FreeModuleSpec src = f.target(), tgt = f.source();
    auto negate = [](FreeModuleSpec& s) {
        if (s.degrees)
            for (auto& d : *s.degrees) d = -d;
    };
    negate(src);
    negate(tgt);
    PolyMatrix r(f.ring(), src, tgt);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = f.at(j, i);
    return r;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows()) throw error("hstack: row mismatch");
    FreeModuleSpec src(a.cols() + b.cols());
    if (a.source().graded() && b.source().graded()) {
        std::vector<int> degs = *a.source().degrees;
        degs.insert(degs.end(), b.source().degrees->begin(), b.source().degrees->end());
        src.degrees = std::move(degs);
    }
    PolyMatrix r(a.ring(), src, a.target());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

namespace {

struct BareissState {
    std::vector<std::vector<Polynomial>> a;
    int rows, cols;
    int sign = 1;

    explicit BareissState(const PolyMatrix& f) : rows(f.rows()), cols(f.cols()) {
        a.resize(rows);
        for (int i = 0; i < rows; ++i) {
            a[i].reserve(cols);
            for (int j = 0; j < cols; ++j) a[i].push_back(f.at(i, j));
        }
    }

    // pivot choice: lowest total degree nonzero entry, ties by position
    bool find_pivot(int k, int& pi, int& pj) {
        int best_deg = -1;
        pi = pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                int d = a[i][j].degree();
                if (pi < 0 || d < best_deg) {
                    best_deg = d;
                    pi = i;
                    pj = j;
                }
            }
        return pi >= 0;
    }

    // returns rank; if det_out given, fills fraction-free determinant
    int run(Polynomial* det_out, const Ring& ring) {
        Polynomial prev = Polynomial::constant(ring, 1);
        int k = 0;
        int lim = std::min(rows, cols);
        for (; k < lim; ++k) {
            int pi, pj;
            if (!find_pivot(k, pi, pj)) break;
            if (pi != k) {
                std::swap(a[pi], a[k]);
                sign = -sign;
            }
            if (pj != k) {
                for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][k]);
                sign = -sign;
            }
            for (int i = k + 1; i < rows; ++i) {
                for (int j = k + 1; j < cols; ++j) {
                    Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                    a[i][j] = num.is_zero() ? num : num.exact_div(prev);
                }
                a[i][k] = Polynomial::zero(ring);
            }
            prev = a[k][k];
        }
        if (det_out) {
            if (rows != cols) throw error("determinant of non-square matrix");
            if (k < rows) {
                *det_out = Polynomial::zero(ring);
            } else {
                *det_out = sign == 1 ? a[rows - 1][rows - 1] : -a[rows - 1][rows - 1];
            }
        }
        return k;
    }
};

}  // namespace

int matrix_rank(const PolyMatrix& f) {
    if (f.rows() == 0 || f.cols() == 0) return 0;
    BareissState st(f);
    return st.run(nullptr, f.ring());
}

Polynomial poly_determinant(const PolyMatrix& f) {
    if (f.rows() != f.cols()) throw error("determinant of non-square matrix");
    if (f.rows() == 0) return Polynomial::constant(f.ring(), 1);
    BareissState st(f);
    Polynomial det(f.ring());
    st.run(&det, f.ring());
    return det;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int t) {
    std::vector<std::vector<int>> out;
    if (t > n || t < 0) return out;
    std::vector<int> c(t);
    for (int i = 0; i < t; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = t - 1;
        while (i >= 0 && c[i] == n - t + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

Polynomial submatrix_det(const PolyMatrix& f, const std::vector<int>& rs,
                         const std::vector<int>& cs) {
    int t = static_cast<int>(rs.size());
    std::vector<Polynomial> es;
    es.reserve(static_cast<size_t>(t) * t);
    for (int i : rs)
        for (int j : cs) es.push_back(f.at(i, j));
    PolyMatrix sub(f.ring(), FreeModuleSpec(t), FreeModuleSpec(t), std::move(es));
    return poly_determinant(sub);
}

IdealData collect_minors(const PolyMatrix& f, int t, bool parallel) {
    if (t < 1 || t > std::min(f.rows(), f.cols()))
        throw error("minor size out of range");
    auto row_sets = combinations(f.rows(), t);
    auto col_sets = combinations(f.cols(), t);
    size_t total = row_sets.size() * col_sets.size();
    std::vector<Polynomial> minors(total, Polynomial::zero(f.ring()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && total > 8)
#endif
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        const auto& rs = row_sets[idx / col_sets.size()];
        const auto& cs = col_sets[idx % col_sets.size()];
        minors[idx] = submatrix_det(f, rs, cs);
    }
    // monic-normalize so sign twins collapse in deduplication
    for (auto& m : minors) {
        if (m.is_zero()) continue;
        uint32_t lc = m.lead().coef;
        if (lc != 1) m = m.scaled(fp_inv(lc, f.ring()->characteristic));
    }
    (void)parallel;
    return IdealData(f.ring(), std::move(minors));
}

}  // namespace

IdealData minor_ideal(const PolyMatrix& f, int t) { return collect_minors(f, t, true); }

IdealData minor_ideal_serial(const PolyMatrix& f, int t) {
    return collect_minors(f, t, false);
}

int evaluation_rank(const PolyMatrix& f, const std::vector<uint32_t>& point) {
    const uint32_t p = f.ring()->characteristic;
    int rows = f.rows(), cols = f.cols();
    std::vector<std::vector<uint32_t>> a(rows, std::vector<uint32_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = f.at(i, j).evaluate(point);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        uint32_t inv = fp_inv(a[rank][col], p);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            uint32_t factor = fp_mul(a[i][col], inv, p);
            for (int j = col; j < cols; ++j)
                a[i][j] = fp_sub(a[i][j], fp_mul(factor, a[rank][j], p), p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace bruns
