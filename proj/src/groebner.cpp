#include "bruns/groebner.hpp"

#include <algorithm>
#include <set>

namespace bruns {

ModuleElement::ModuleElement(Ring r, int rank)
    : ring(std::move(r)), components(rank, Polynomial::zero(ring)) {
    for (auto& c : components) c = Polynomial::zero(ring);
}

ModuleElement::ModuleElement(Ring r, std::vector<Polynomial> comps)
    : ring(std::move(r)), components(std::move(comps)) {}

bool ModuleElement::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

int ModuleElement::lead_position() const {
    for (int i = 0; i < rank(); ++i)
        if (!components[i].is_zero()) return i;
    return -1;
}

const Term& ModuleElement::lead_term() const {
    int p = lead_position();
    if (p < 0) throw error("lead term of zero module element");
    return components[p].lead();
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    ModuleElement r(ring, rank());
    for (int i = 0; i < rank(); ++i) r.components[i] = components[i] + o.components[i];
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    ModuleElement r(ring, rank());
    for (int i = 0; i < rank(); ++i) r.components[i] = components[i] - o.components[i];
    return r;
}

ModuleElement ModuleElement::times_term(uint32_t coef, const Monomial& m) const {
    ModuleElement r(ring, rank());
    for (int i = 0; i < rank(); ++i) r.components[i] = components[i].times_term(coef, m);
    return r;
}

ModuleElement ModuleElement::scaled(uint32_t c) const {
    ModuleElement r(ring, rank());
    for (int i = 0; i < rank(); ++i) r.components[i] = components[i].scaled(c);
    return r;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    return components == o.components;
}

namespace {

// position-over-term: earlier positions are larger
int pot_cmp(int pa, const Monomial& ma, int pb, const Monomial& mb, MonomialOrder ord) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return mono_cmp(ma, mb, ord);
}

int elem_lead_cmp(const ModuleElement& a, const ModuleElement& b) {
    int pa = a.lead_position(), pb = b.lead_position();
    if (pa < 0 || pb < 0) throw error("lead comparison with zero element");
    return pot_cmp(pa, a.lead_term().mono, pb, b.lead_term().mono, a.ring->order);
}

ModuleElement make_monic(const ModuleElement& v) {
    uint32_t lc = v.lead_term().coef;
    if (lc == 1) return v;
    return v.scaled(fp_inv(lc, v.ring->characteristic));
}

}  // namespace

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasisData& basis) {
    if (!basis.generators.empty() &&
        basis.generators.front().rank() != v.rank())
        throw error("normal_form: ambient rank mismatch");
    const Ring& ring = v.ring;
    const uint32_t p = ring->characteristic;
    ModuleElement rem(ring, v.rank());
    ModuleElement w = v;
    while (!w.is_zero()) {
        int pos = w.lead_position();
        const Term lt = w.components[pos].lead();
        const ModuleElement* red = nullptr;
        for (const auto& g : basis.generators) {
            if (g.lead_position() == pos && g.lead_term().mono.divides(lt.mono)) {
                red = &g;
                break;
            }
        }
        if (red) {
            uint32_t c = fp_mul(lt.coef, fp_inv(red->lead_term().coef, p), p);
            Monomial m = lt.mono / red->lead_term().mono;
            w = w - red->times_term(c, m);
        } else {
            Polynomial t = Polynomial::monomial(ring, lt.coef, lt.mono);
            rem.components[pos] = rem.components[pos] + t;
            w.components[pos] = w.components[pos] - t;
        }
    }
    return rem;
}

bool in_submodule(const ModuleElement& v, const GroebnerBasisData& basis) {
    return normal_form(v, basis).is_zero();
}

GroebnerBasisData buchberger(const std::vector<ModuleElement>& gens,
                             const FreeModuleSpec& ambient, const Ring& ring) {
    GroebnerBasisData work{ambient, {}};
    for (const auto& g : gens) {
        if (static_cast<int>(g.components.size()) != ambient.rank)
            throw error("buchberger: generator rank mismatch");
        if (!g.is_zero()) work.generators.push_back(make_monic(g));
    }

    struct Pair {
        int i, j;
        int deg;  // total degree of the lcm of lead monomials
    };
    std::vector<Pair> pending;
    std::set<std::pair<int, int>> pending_set;

    auto add_pairs_for = [&](int idx) {
        for (int i = 0; i < idx; ++i) {
            if (work.generators[i].lead_position() !=
                work.generators[idx].lead_position())
                continue;
            Monomial l = mono_lcm(work.generators[i].lead_term().mono,
                                  work.generators[idx].lead_term().mono);
            pending.push_back(Pair{i, idx, l.degree()});
            pending_set.insert({i, idx});
        }
    };
    for (int i = 0; i < static_cast<int>(work.generators.size()); ++i) add_pairs_for(i);
    while (!pending.empty()) {
        // normal strategy: lowest lcm degree first, ties by index
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);
        pending_set.erase({pr.i, pr.j});

        const ModuleElement& gi = work.generators[pr.i];
        const ModuleElement& gj = work.generators[pr.j];
        const Monomial &mi = gi.lead_term().mono, &mj = gj.lead_term().mono;
        // product criterion (valid in the rank-1 ideal case only)
        if (ambient.rank == 1 && mono_coprime(mi, mj)) continue;
        // chain criterion
        Monomial l = mono_lcm(mi, mj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(work.generators.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const ModuleElement& gk = work.generators[k];
            if (gk.lead_position() != gi.lead_position()) continue;
            if (!gk.lead_term().mono.divides(l)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending_set.count(key(pr.i, k)) && !pending_set.count(key(k, pr.j)))
                skip = true;
        }
        if (skip) continue;

        ModuleElement s = gi.times_term(1, l / mi) - gj.times_term(1, l / mj);
        ModuleElement h = normal_form(s, work);
        if (h.is_zero()) continue;
        work.generators.push_back(make_monic(h));
        add_pairs_for(static_cast<int>(work.generators.size()) - 1);
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    std::vector<ModuleElement> sorted = work.generators;
    std::sort(sorted.begin(), sorted.end(),
              [](const ModuleElement& a, const ModuleElement& b) {
                  return elem_lead_cmp(a, b) < 0;
              });
    std::vector<ModuleElement> minimal;
    for (const auto& g : sorted) {
        bool redundant = false;
        for (const auto& h : minimal) {
            if (h.lead_position() == g.lead_position() &&
                h.lead_term().mono.divides(g.lead_term().mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    // tail-reduce for the reduced basis
    GroebnerBasisData out{ambient, {}};
    for (size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasisData others{ambient, {}};
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.generators.push_back(minimal[j]);
        ModuleElement r = normal_form(minimal[i], others);
        if (!r.is_zero()) out.generators.push_back(make_monic(r));
    }
    std::sort(out.generators.begin(), out.generators.end(),
              [](const ModuleElement& a, const ModuleElement& b) {
                  return elem_lead_cmp(a, b) > 0;
              });
    return out;
}

GroebnerBasisData column_basis(const PolyMatrix& f) {
    std::vector<ModuleElement> gens;
    for (int j = 0; j < f.cols(); ++j)
        gens.emplace_back(f.ring(), f.column(j));
    return buchberger(gens, FreeModuleSpec(f.rows()), f.ring());
}

PolyMatrix syzygies(const PolyMatrix& f) {
    const Ring& ring = f.ring();
    int r = f.rows(), c = f.cols();
    if (c == 0) return PolyMatrix(ring, FreeModuleSpec(0), f.source());

    std::vector<ModuleElement> lifted;
    for (int j = 0; j < c; ++j) {
        std::vector<Polynomial> comps(r + c, Polynomial::zero(ring));
        for (int i = 0; i < r; ++i) comps[i] = f.at(i, j);
        comps[r + j] = Polynomial::constant(ring, 1);
        lifted.emplace_back(ring, std::move(comps));
    }
    GroebnerBasisData gb = buchberger(lifted, FreeModuleSpec(r + c), ring);

    std::vector<std::vector<Polynomial>> cols;
    for (const auto& g : gb.generators) {
        if (g.lead_position() < r) continue;  // top part nonzero
        std::vector<Polynomial> bottom(g.components.begin() + r, g.components.end());
        cols.push_back(std::move(bottom));
    }

    FreeModuleSpec src(static_cast<int>(cols.size()));
    // degree inference for graded inputs
    if (f.source().graded()) {
        std::vector<int> degs;
        bool ok = true;
        for (const auto& col : cols) {
            int coldeg = 0;
            bool found = false;
            for (int i = 0; i < c && ok; ++i) {
                if (col[i].is_zero()) continue;
                int d;
                if (!col[i].is_homogeneous(&d)) {
                    ok = false;
                    break;
                }
                int cand = d + (*f.source().degrees)[i];
                if (!found) {
                    coldeg = cand;
                    found = true;
                } else if (cand != coldeg) {
                    ok = false;
                }
            }
            if (!ok) break;
            degs.push_back(found ? coldeg : 0);
        }
        if (ok) src.degrees = std::move(degs);
    }

    PolyMatrix S(ring, src, f.source());
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < c; ++i) S.at(i, static_cast<int>(j)) = cols[j][i];
    return S;
}

PolyMatrix kernel_to_cokernel(const PolyMatrix& f, const PolyMatrix& modulus) {
    if (f.rows() != modulus.rows()) throw error("kernel_to_cokernel: target mismatch");
    PolyMatrix block = hstack(f, modulus);
    PolyMatrix S = syzygies(block);
    std::vector<std::vector<Polynomial>> cols;
    std::vector<int> degs;
    for (int j = 0; j < S.cols(); ++j) {
        std::vector<Polynomial> v;
        bool nonzero = false;
        for (int i = 0; i < f.cols(); ++i) {
            v.push_back(S.at(i, j));
            if (!S.at(i, j).is_zero()) nonzero = true;
        }
        if (nonzero) {
            cols.push_back(std::move(v));
            if (S.source().graded()) degs.push_back((*S.source().degrees)[j]);
        }
    }
    FreeModuleSpec src(static_cast<int>(cols.size()));
    if (S.source().graded()) src.degrees = std::move(degs);
    PolyMatrix K(f.ring(), src, f.source());
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < f.cols(); ++i) K.at(i, static_cast<int>(j)) = cols[j][i];
    return K;
}

void ResolutionData::validate() const {
    for (size_t k = 1; k < differentials.size(); ++k) {
        if (differentials[k].target().rank != differentials[k - 1].source().rank)
            throw error("complex differentials not composable at position " +
                        std::to_string(k + 1));
        if (!compose(differentials[k - 1], differentials[k]).is_zero())
            throw error("complex does not satisfy d∘d = 0 at position " +
                        std::to_string(k + 1));
    }
}

std::vector<int> ResolutionData::free_ranks() const {
    std::vector<int> r;
    if (differentials.empty()) return r;
    r.push_back(differentials[0].target().rank);
    for (const auto& d : differentials) r.push_back(d.source().rank);
    return r;
}

ResolutionData resolve(const PolyMatrix& presentation, int max_length) {
    if (max_length < 0) throw error("resolve: negative max_length");
    const Ring& ring = presentation.ring();
    int hilbert_cap = ring->nvars();
    int cap = std::max(1, std::min(max_length, hilbert_cap));
    ResolutionData res{ring, {presentation}, false};
    while (res.length() < cap) {
        PolyMatrix S = syzygies(res.differentials.back());
        if (S.cols() == 0) break;
        res.differentials.push_back(std::move(S));
    }
    return res;
}

namespace {

PolyMatrix delete_row_col(const PolyMatrix& m, int drop_row, int drop_col) {
    FreeModuleSpec src(m.cols() - (drop_col >= 0 ? 1 : 0));
    FreeModuleSpec tgt(m.rows() - (drop_row >= 0 ? 1 : 0));
    if (m.source().graded()) {
        std::vector<int> d = *m.source().degrees;
        if (drop_col >= 0) d.erase(d.begin() + drop_col);
        src.degrees = std::move(d);
    }
    if (m.target().graded()) {
        std::vector<int> d = *m.target().degrees;
        if (drop_row >= 0) d.erase(d.begin() + drop_row);
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

ResolutionData prune(const ResolutionData& res) {
    for (const auto& d : res.differentials)
        if (!d.source().graded() || !d.target().graded())
            throw error("prune requires a graded complex");

    const Ring& ring = res.ring;
    const uint32_t p = ring->characteristic;
    std::vector<PolyMatrix> fs = res.differentials;

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < fs.size() && !changed; ++k) {
            PolyMatrix& f = fs[k];
            for (int i = 0; i < f.rows() && !changed; ++i) {
                for (int j = 0; j < f.cols() && !changed; ++j) {
                    if (!f.at(i, j).is_unit()) continue;
                    uint32_t uinv = fp_inv(f.at(i, j).lead().coef, p);
                    // clear row i by column operations; compensate on f_{k+1}
                    for (int j2 = 0; j2 < f.cols(); ++j2) {
                        if (j2 == j || f.at(i, j2).is_zero()) continue;
                        Polynomial c = f.at(i, j2).scaled(uinv);
                        for (int i2 = 0; i2 < f.rows(); ++i2)
                            f.at(i2, j2) = f.at(i2, j2) - c * f.at(i2, j);
                        if (k + 1 < fs.size()) {
                            PolyMatrix& g = fs[k + 1];
                            for (int j3 = 0; j3 < g.cols(); ++j3)
                                g.at(j, j3) = g.at(j, j3) + c * g.at(j2, j3);
                        }
                    }
                    // clear column j by row operations; compensate on f_{k-1}
                    for (int i2 = 0; i2 < f.rows(); ++i2) {
                        if (i2 == i || f.at(i2, j).is_zero()) continue;
                        Polynomial c = f.at(i2, j).scaled(uinv);
                        for (int j2 = 0; j2 < f.cols(); ++j2)
                            f.at(i2, j2) = f.at(i2, j2) - c * f.at(i, j2);
                        if (k >= 1) {
                            PolyMatrix& e = fs[k - 1];
                            for (int i3 = 0; i3 < e.rows(); ++i3)
                                e.at(i3, i) = e.at(i3, i) + c * e.at(i3, i2);
                        }
                    }
                    // d∘d = 0 forces the adjacent row/column to vanish now
                    if (k + 1 < fs.size()) {
                        for (int j3 = 0; j3 < fs[k + 1].cols(); ++j3)
                            if (!fs[k + 1].at(j, j3).is_zero())
                                throw error("prune: input is not a complex");
                    }
                    if (k >= 1) {
                        for (int i3 = 0; i3 < fs[k - 1].rows(); ++i3)
                            if (!fs[k - 1].at(i3, i).is_zero())
                                throw error("prune: input is not a complex");
                    }
                    fs[k] = delete_row_col(fs[k], i, j);
                    if (k + 1 < fs.size()) fs[k + 1] = delete_row_col(fs[k + 1], j, -1);
                    if (k >= 1) fs[k - 1] = delete_row_col(fs[k - 1], -1, i);
                    changed = true;
                }
            }
        }
    }

    while (!fs.empty() && fs.back().cols() == 0) fs.pop_back();
    return ResolutionData{ring, std::move(fs), true};
}

GroebnerBasisData ideal_basis(const IdealData& ideal) {
    std::vector<ModuleElement> gens;
    for (const auto& g : ideal.generators)
        gens.emplace_back(ideal.ring, std::vector<Polynomial>{g});
    return buchberger(gens, FreeModuleSpec(1), ideal.ring);
}

int quotient_dimension(const IdealData& ideal) {
    const Ring& ring = ideal.ring;
    int d = ring->nvars();
    if (ideal.is_zero()) return d;
    GroebnerBasisData gb = ideal_basis(ideal);
    std::vector<Monomial> leads;
    for (const auto& g : gb.generators) {
        const Monomial& m = g.lead_term().mono;
        if (m.is_one()) return -1;  // unit ideal
        leads.push_back(m);
    }
    // largest variable subset meeting no lead monomial support
    int best = -1;
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc <= best) continue;
        bool ok = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (int v = 0; v < d; ++v)
                if (m.exponents[v] > 0 && !(mask & (1u << v))) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = pc;
    }
    return best;
}

bool ideal_equal(const IdealData& a, const IdealData& b) {
    GroebnerBasisData ga = ideal_basis(a), gb = ideal_basis(b);
    for (const auto& g : a.generators)
        if (!in_submodule(ModuleElement(a.ring, {g}), gb)) return false;
    for (const auto& g : b.generators)
        if (!in_submodule(ModuleElement(b.ring, {g}), ga)) return false;
    return true;
}

}  // namespace bruns
