#include "bruns/invariants.hpp"

namespace bruns {

Grade grade(const IdealData& ideal) {
    if (ideal.is_zero()) return Grade::of(0);
    int dim = quotient_dimension(ideal);
    if (dim < 0) return Grade::inf();
    // ambient polynomial ring is Cohen-Macaulay: grade = height = d - dim
    return Grade::of(ideal.ring->nvars() - dim);
}

IdealData be_ideal(const PolyMatrix& f) {
    int r = matrix_rank(f);
    if (r == 0)
        return IdealData(f.ring(), {Polynomial::constant(f.ring(), 1)});
    return minor_ideal(f, r);
}

ExactnessCertificate check_exactness(const ResolutionData& complex) {
    ExactnessCertificate cert;
    int n = complex.length();
    std::vector<int> ranks(n + 2, 0);
    for (int k = 1; k <= n; ++k) ranks[k] = matrix_rank(complex.differentials[k - 1]);
    cert.pass = true;
    for (int k = 1; k <= n; ++k) {
        const PolyMatrix& fk = complex.differentials[k - 1];
        ExactnessPosition pos;
        pos.position = k;
        pos.rank_module = fk.source().rank;
        pos.rank_map = ranks[k];
        pos.rank_next = k < n ? ranks[k + 1] : 0;
        pos.rank_ok = pos.rank_map + pos.rank_next == pos.rank_module;
        pos.grade_value = grade(be_ideal(fk));
        pos.grade_ok = pos.grade_value.at_least(k);
        if ((!pos.rank_ok || !pos.grade_ok) && cert.pass) {
            cert.pass = false;
            cert.first_fail = k;
        }
        cert.positions.push_back(std::move(pos));
    }
    return cert;
}

TorsionlessCertificate check_torsionless(const PolyMatrix& presentation, int m) {
    if (m < 0) throw error("check_torsionless: negative m");
    TorsionlessCertificate cert;
    cert.m = m;
    const Ring& ring = presentation.ring();
    ResolutionData res = resolve(presentation, ring->nvars());
    bool graded = true;
    for (const auto& d : res.differentials)
        if (!d.source().graded() || !d.target().graded()) {
            graded = false;
            break;
        }
    if (graded) res = prune(res);
    cert.resolution = res;
    cert.pass = true;
    if (m == 0) return cert;
    for (int i = 1; i <= res.length(); ++i) {
        TorsionlessStep step;
        step.index = i;
        step.required = m + i;
        step.grade_value = grade(be_ideal(res.differentials[i - 1]));
        step.ok = step.grade_value.at_least(step.required);
        if (!step.ok) cert.pass = false;
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

namespace {

PolyMatrix drop_row_col(const PolyMatrix& m, int drop_row, int drop_col) {
    FreeModuleSpec src(m.cols() - 1), tgt(m.rows() - 1);
    if (m.source().graded()) {
        std::vector<int> d = *m.source().degrees;
        d.erase(d.begin() + drop_col);
        src.degrees = std::move(d);
    }
    if (m.target().graded()) {
        std::vector<int> d = *m.target().degrees;
        d.erase(d.begin() + drop_row);
        tgt.degrees = std::move(d);
    }
    PolyMatrix out(m.ring(), src, tgt);
    int oi = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == drop_row) continue;
        int oj = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == drop_col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace

PolyMatrix prune_presentation(const PolyMatrix& presentation) {
    PolyMatrix f = presentation;
    const uint32_t p = f.ring()->characteristic;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < f.rows() && !changed; ++i) {
            for (int j = 0; j < f.cols() && !changed; ++j) {
                if (!f.at(i, j).is_unit()) continue;
                uint32_t uinv = fp_inv(f.at(i, j).lead().coef, p);
                for (int j2 = 0; j2 < f.cols(); ++j2) {
                    if (j2 == j || f.at(i, j2).is_zero()) continue;
                    Polynomial c = f.at(i, j2).scaled(uinv);
                    for (int i2 = 0; i2 < f.rows(); ++i2)
                        f.at(i2, j2) = f.at(i2, j2) - c * f.at(i2, j);
                }
                for (int i2 = 0; i2 < f.rows(); ++i2) {
                    if (i2 == i || f.at(i2, j).is_zero()) continue;
                    Polynomial c = f.at(i2, j).scaled(uinv);
                    for (int j2 = 0; j2 < f.cols(); ++j2)
                        f.at(i2, j2) = f.at(i2, j2) - c * f.at(i, j2);
                }
                f = drop_row_col(f, i, j);
                changed = true;
            }
        }
    }
    return f;
}

int minimal_generator_count(const PolyMatrix& presentation) {
    if (!presentation.source().graded() || !presentation.target().graded())
        throw error("minimal_generator_count requires a graded presentation");
    return prune_presentation(presentation).rows();
}

}  // namespace bruns
