#include "bruns/construct.hpp"

#include <algorithm>

#include "bruns/koszul.hpp"

namespace bruns {

std::vector<std::string> default_variable_names(int d) {
    static const char* letters[] = {"x", "y", "z", "w", "u", "v"};
    std::vector<std::string> names;
    if (d <= 6) {
        for (int i = 0; i < d; ++i) names.emplace_back(letters[i]);
    } else {
        for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    }
    return names;
}

PresentedModule transpose_module(const PresentedModule& M) {
    return PresentedModule(dual(M.presentation));
}

namespace {

std::vector<Polynomial> apply_matrix(const PolyMatrix& g, const ModuleElement& x) {
    std::vector<Polynomial> out(g.rows(), Polynomial::zero(g.ring()));
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            if (g.at(i, j).is_zero() || x.components[j].is_zero()) continue;
            out[i] = out[i] + g.at(i, j) * x.components[j];
        }
    return out;
}

PolyMatrix columns_matrix(const Ring& ring, const std::vector<ModuleElement>& cols,
                          const FreeModuleSpec& target,
                          const std::optional<std::vector<int>>& source_degrees) {
    FreeModuleSpec src(static_cast<int>(cols.size()));
    if (source_degrees) src.degrees = *source_degrees;
    PolyMatrix m(ring, src, target);
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < target.rank; ++i)
            m.at(i, static_cast<int>(j)) = cols[j].components[i];
    return m;
}

PolyMatrix first_columns(const PolyMatrix& g, int k) {
    FreeModuleSpec src(k);
    if (g.source().graded())
        src.degrees = std::vector<int>(g.source().degrees->begin(),
                                       g.source().degrees->begin() + k);
    PolyMatrix out(g.ring(), src, g.target());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = g.at(i, j);
    return out;
}

TorsionlessCertificate require_torsionless(const PolyMatrix& pres, int m,
                                           const std::string& what) {
    TorsionlessCertificate cert = check_torsionless(pres, m);
    if (!cert.pass)
        throw certification_error(what + " is not " + std::to_string(m) +
                                  "-torsionless");
    return cert;
}

struct BasicStep {
    ModuleElement x;                 // in the current R^n
    std::vector<Polynomial> image;   // g(x) in ambient(M)
    PolyMatrix quotient_pres;
    TorsionlessCertificate cert;
    int attempts = 0;
};

BasicStep find_basic_step(const PolyMatrix& g, const PresentedModule& M, int m,
                          const SearchConfig& cfg, RandomSource& rng) {
    const Ring& ring = g.ring();
    int n = g.cols();
    if (n == 0) throw error("find_basic_combination: empty cover");
    int rM = M.rank();
    if (rM <= m)
        throw error("find_basic_combination: rank(M) must exceed m");

    const bool graded = g.source().graded();
    const int base_rank = matrix_rank(M.presentation);

    BasicStep step;
    for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        step.attempts = attempt;
        ModuleElement x(ring, n);
        x.components[n - 1] = Polynomial::constant(ring, 1);
        for (int i = 0; i < n - 1; ++i) {
            if (graded) {
                int delta = (*g.source().degrees)[n - 1] - (*g.source().degrees)[i];
                if (delta < 0) continue;
                x.components[i] = random_form(ring, delta, rng);
            } else {
                x.components[i] = Polynomial::constant(ring, rng.nonzero_scalar(ring->characteristic));
            }
        }
        std::vector<Polynomial> gx = apply_matrix(g, x);
        FreeModuleSpec col_src(1);
        if (graded && M.presentation.source().graded())
            col_src.degrees = std::vector<int>{(*g.source().degrees)[n - 1]};
        PolyMatrix col(ring, col_src, M.presentation.target());
        for (int i = 0; i < M.ambient_rank(); ++i) col.at(i, 0) = gx[i];
        PolyMatrix q = hstack(M.presentation, col);
        if (matrix_rank(q) != base_rank + 1) continue;  // rank did not drop by one
        TorsionlessCertificate cert = check_torsionless(q, m);
        if (!cert.pass) continue;
        step.x = std::move(x);
        step.image = std::move(gx);
        step.quotient_pres = std::move(q);
        step.cert = std::move(cert);
        return step;
    }
    throw search_exhausted("basic-element search exhausted after " +
                           std::to_string(cfg.max_attempts) +
                           " attempts; try a different seed");
}

// Projection R^u -> R^{keep} along the quotiented vectors x_{keep+1}..x_u,
// each with unit lead coordinate keep..u-1 and tail below it.
PolyMatrix quotient_projection(const std::vector<ModuleElement>& xs, int keep,
                               const FreeModuleSpec& source) {
    if (static_cast<int>(xs.size()) != source.rank - keep)
        throw error("quotient_projection: inconsistent sizes");
    int u = source.rank;
    FreeModuleSpec tgt(keep);
    if (source.graded())
        tgt.degrees =
            std::vector<int>(source.degrees->begin(), source.degrees->begin() + keep);
    PolyMatrix c(xs[0].ring, source, tgt);
    for (int j = 0; j < u; ++j) {
        std::vector<Polynomial> v(u, Polynomial::zero(xs[0].ring));
        v[j] = Polynomial::constant(xs[0].ring, 1);
        for (int k = u - 1; k >= keep; --k) {
            const ModuleElement& x = xs[k - keep];
            if (v[k].is_zero()) continue;
            Polynomial coeff = v[k];
            for (int i = 0; i <= k; ++i)
                if (!x.components[i].is_zero()) v[i] = v[i] - coeff * x.components[i];
        }
        for (int i = 0; i < keep; ++i) c.at(i, j) = v[i];
    }
    return c;
}

RankReduction reduce_rank_impl(const PolyMatrix& g, const PresentedModule& M, int m,
                               const SearchConfig& cfg, RandomSource& rng) {
    const Ring& ring = g.ring();
    int n = g.cols();
    if (g.rows() != M.ambient_rank()) throw error("reduce_rank: cover target mismatch");

    // surjectivity of the induced map R^n -> M
    {
        GroebnerBasisData gb = column_basis(hstack(g, M.presentation));
        for (int i = 0; i < g.rows(); ++i) {
            ModuleElement e(ring, g.rows());
            e.components[i] = Polynomial::constant(ring, 1);
            if (!in_submodule(e, gb)) throw error("reduce_rank: cover is not surjective");
        }
    }

    RankReduction red;
    red.certificate = require_torsionless(M.presentation, m, "reduce_rank input");
    int r = M.rank();
    if (r < m) throw error("reduce_rank: rank(M) below m");

    PolyMatrix cur_pres = M.presentation;
    int n_cur = n;
    for (int step = 0; step < r - m; ++step) {
        PolyMatrix g_cur = first_columns(g, n_cur);
        BasicStep bs =
            find_basic_step(g_cur, PresentedModule(cur_pres), m, cfg, rng);
        red.attempts_used += bs.attempts;
        // pad x back into R^n
        ModuleElement x(ring, n);
        for (int i = 0; i < n_cur; ++i) x.components[i] = bs.x.components[i];
        red.quotiented.push_back(std::move(x));
        red.quotient_images.emplace_back(ring, bs.image);
        cur_pres = bs.quotient_pres;
        red.certificate = bs.cert;
        --n_cur;
    }
    std::reverse(red.quotiented.begin(), red.quotiented.end());
    std::reverse(red.quotient_images.begin(), red.quotient_images.end());

    red.quotient = PresentedModule(cur_pres);
    red.compressed_cover = first_columns(g, n_cur);

    // basis change: e_1..e_{s-1}, x_s..x_n
    PolyMatrix change(ring, g.source(), g.source());
    for (int j = 0; j < n_cur; ++j) change.at(j, j) = Polynomial::constant(ring, 1);
    for (size_t k = 0; k < red.quotiented.size(); ++k)
        for (int i = 0; i < n; ++i)
            change.at(i, n_cur + static_cast<int>(k)) = red.quotiented[k].components[i];
    red.basis_change = std::move(change);

    // condition (4): Ker(g) meets the quotiented span trivially
    if (!red.quotiented.empty()) {
        PolyMatrix K = kernel_to_cokernel(g, M.presentation);
        if (K.cols() > 0) {
            PolyMatrix X = columns_matrix(ring, red.quotiented, g.source(), std::nullopt);
            PolyMatrix S = syzygies(hstack(K, X));
            for (int j = 0; j < S.cols(); ++j) {
                std::vector<Polynomial> kz(n, Polynomial::zero(ring));
                for (int i = 0; i < n; ++i)
                    for (int t = 0; t < K.cols(); ++t) {
                        if (K.at(i, t).is_zero() || S.at(t, j).is_zero()) continue;
                        kz[i] = kz[i] + K.at(i, t) * S.at(t, j);
                    }
                for (const auto& pz : kz)
                    if (!pz.is_zero())
                        throw certification_error(
                            "reduce_rank: kernel of the cover is not preserved");
            }
        }
    }
    return red;
}

}  // namespace

ModuleElement find_basic_combination(const PolyMatrix& g, const PresentedModule& M,
                                     int m, const SearchConfig& cfg) {
    require_torsionless(M.presentation, m, "find_basic_combination input");
    RandomSource rng(cfg.seed);
    return find_basic_step(g, M, m, cfg, rng).x;
}

RankReduction reduce_rank(const PolyMatrix& g, const PresentedModule& M, int m,
                          const SearchConfig& cfg) {
    RandomSource rng(cfg.seed);
    return reduce_rank_impl(g, M, m, cfg, rng);
}

EmbeddingStep embed_in_free(const PresentedModule& M, int m) {
    if (m < 1) throw error("embed_in_free requires m >= 1");
    require_torsionless(M.presentation, m, "embed_in_free input");
    const Ring& ring = M.ring();
    PolyMatrix B = syzygies(dual(M.presentation));
    PolyMatrix E = dual(B);  // ambient(M) -> R^t
    if (!compose(E, M.presentation).is_zero())
        throw error("embed_in_free: embedding does not kill the presentation");
    // verified injectivity of the induced map M -> R^t
    PolyMatrix K = syzygies(E);
    if (K.cols() > 0) {
        GroebnerBasisData gb = column_basis(M.presentation);
        for (int j = 0; j < K.cols(); ++j) {
            ModuleElement v(ring, K.column(j));
            if (!in_submodule(v, gb))
                throw certification_error("embed_in_free: induced map has nonzero kernel");
        }
    }
    EmbeddingStep step;
    step.embedding = std::move(E);
    step.cokernel = PresentedModule(step.embedding);
    step.torsionless_level = m - 1;
    return step;
}

namespace {

std::pair<IdealData, PolyMatrix> realize_impl(const PresentedModule& M,
                                              const SearchConfig& cfg,
                                              RandomSource& rng, int& attempts) {
    const Ring& ring = M.ring();
    if (M.rank() != 1) throw error("realize_as_ideal: module must have rank 1");
    EmbeddingStep step = embed_in_free(M, 1);
    const PolyMatrix& E = step.embedding;
    int t = E.rows();

    GroebnerBasisData gbA = column_basis(M.presentation);
    auto try_phi = [&](const PolyMatrix& phi) -> bool {
        PolyMatrix S = syzygies(phi);
        for (int j = 0; j < S.cols(); ++j) {
            ModuleElement v(ring, S.column(j));
            if (!in_submodule(v, gbA)) return false;
        }
        return true;
    };

    if (t == 1) {
        ++attempts;
        PolyMatrix phi = E;
        if (!try_phi(phi))
            throw certification_error("realize_as_ideal: embedding into R not injective");
        std::vector<Polynomial> gens;
        for (int j = 0; j < phi.cols(); ++j) gens.push_back(phi.at(0, j));
        return {IdealData(ring, std::move(gens)), phi};
    }

    const bool graded = E.target().graded();
    int cdeg = 0;
    if (graded) {
        cdeg = (*E.target().degrees)[0];
        for (int v : *E.target().degrees) cdeg = std::min(cdeg, v);
    }
    for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        ++attempts;
        FreeModuleSpec tgt(1);
        if (graded) tgt.degrees = std::vector<int>{cdeg};
        PolyMatrix pi(ring, E.target(), tgt);
        for (int j = 0; j < t; ++j) {
            int delta = graded ? (*E.target().degrees)[j] - cdeg : 0;
            pi.at(0, j) = random_form(ring, delta, rng);
        }
        PolyMatrix phi = compose(pi, E);
        if (!try_phi(phi)) continue;
        std::vector<Polynomial> gens;
        for (int j = 0; j < phi.cols(); ++j) gens.push_back(phi.at(0, j));
        return {IdealData(ring, std::move(gens)), phi};
    }
    throw search_exhausted("realize_as_ideal: generic projection search exhausted");
}

ResolutionData chain_impl(const PresentedModule& M, int m, const SearchConfig& cfg,
                          RandomSource& rng, int& attempts,
                          std::vector<TorsionlessCertificate>* certs) {
    const Ring& ring = M.ring();
    require_torsionless(M.presentation, m, "corollary1_chain input");

    std::vector<PolyMatrix> maps_top_down;
    PresentedModule cur = M;
    for (int level = m; level >= 2; --level) {
        int r_cur = cur.rank();
        EmbeddingStep step = embed_in_free(cur, level);
        PolyMatrix E = step.embedding;
        int t = E.rows();
        int target = r_cur + level - 1;
        PolyMatrix h = E;
        if (t < target) {
            // pad with a free summand
            int pad = target - t;
            FreeModuleSpec tgt(target);
            if (E.target().graded()) {
                std::vector<int> degs = *E.target().degrees;
                int fill = degs.empty() ? 0 : degs[0];
                bool all_equal = true;
                for (int v : degs) all_equal = all_equal && v == fill;
                if (!all_equal) fill = 0;
                for (int i = 0; i < pad; ++i) degs.push_back(fill);
                tgt.degrees = std::move(degs);
            }
            PolyMatrix padded(ring, E.source(), tgt);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < E.cols(); ++j) padded.at(i, j) = E.at(i, j);
            h = std::move(padded);
        } else if (t > target) {
            PolyMatrix cover = PolyMatrix::identity(ring, E.target());
            RankReduction red =
                reduce_rank_impl(cover, step.cokernel, level - 1, cfg, rng);
            attempts += red.attempts_used;
            PolyMatrix c = quotient_projection(red.quotiented, target, E.target());
            h = compose(c, E);
        }
        TorsionlessCertificate cert =
            require_torsionless(h, level - 1, "corollary1_chain cokernel");
        if (certs) certs->push_back(std::move(cert));
        maps_top_down.push_back(h);
        cur = PresentedModule(h);
    }
    auto [ideal, phi] = realize_impl(cur, cfg, rng, attempts);
    (void)ideal;
    maps_top_down.push_back(phi);

    ResolutionData chain{ring, {}, false};
    for (auto it = maps_top_down.rbegin(); it != maps_top_down.rend(); ++it)
        chain.differentials.push_back(*it);
    return chain;
}

}  // namespace

std::pair<std::vector<ModuleElement>, PresentedModule> bourbaki_split(
    const PresentedModule& M, int m, const SearchConfig& cfg) {
    const Ring& ring = M.ring();
    PolyMatrix cover = PolyMatrix::identity(ring, M.presentation.target());
    RandomSource rng(cfg.seed);
    RankReduction red = reduce_rank_impl(cover, M, m, cfg, rng);
    if (!red.quotient_images.empty()) {
        PolyMatrix gx = columns_matrix(ring, red.quotient_images,
                                       M.presentation.target(), std::nullopt);
        int extra = matrix_rank(hstack(gx, M.presentation)) - matrix_rank(M.presentation);
        if (extra != static_cast<int>(red.quotient_images.size()))
            throw certification_error("bourbaki_split: images are not independent");
    }
    return {red.quotient_images, red.quotient};
}

std::pair<IdealData, PolyMatrix> realize_as_ideal(const PresentedModule& M,
                                                  const SearchConfig& cfg) {
    require_torsionless(M.presentation, 1, "realize_as_ideal input");
    RandomSource rng(cfg.seed);
    int attempts = 0;
    return realize_impl(M, cfg, rng, attempts);
}

ResolutionData corollary1_chain(const PresentedModule& M, int m,
                                const SearchConfig& cfg) {
    RandomSource rng(cfg.seed);
    int attempts = 0;
    return chain_impl(M, m, cfg, rng, attempts, nullptr);
}

BrunsResult brunsify_tail(const ResolutionData& tail, int m, const SearchConfig& cfg) {
    if (tail.length() < 1) throw error("brunsify: empty complex");
    if (m < 1) throw error("brunsify: m must be at least 1");
    const Ring& ring = tail.ring;
    const PolyMatrix& q = tail.differentials[0];
    int u = q.rows();
    int r = matrix_rank(q);

    BrunsResult result;
    result.torsionless.push_back(
        require_torsionless(q, m, "brunsify input cokernel"));

    RandomSource rng(cfg.seed);
    PolyMatrix qprime = q;
    if (u <= r + m) {
        int pad = r + m - u;
        FreeModuleSpec tgt(r + m);
        if (q.target().graded()) {
            std::vector<int> degs = *q.target().degrees;
            int fill = degs.empty() ? 0 : degs[0];
            bool all_equal = true;
            for (int v : degs) all_equal = all_equal && v == fill;
            if (!all_equal) fill = 0;
            for (int i = 0; i < pad; ++i) degs.push_back(fill);
            tgt.degrees = std::move(degs);
        }
        PolyMatrix c(ring, q.target(), tgt);
        for (int i = 0; i < u; ++i) c.at(i, i) = Polynomial::constant(ring, 1);
        result.compression = c;
        PolyMatrix padded(ring, q.source(), tgt);
        for (int i = 0; i < u; ++i)
            for (int j = 0; j < q.cols(); ++j) padded.at(i, j) = q.at(i, j);
        qprime = std::move(padded);
    } else {
        PolyMatrix cover = PolyMatrix::identity(ring, q.target());
        RankReduction red = reduce_rank_impl(cover, PresentedModule(q), m, cfg, rng);
        result.attempts_used += red.attempts_used;
        result.torsionless.push_back(red.certificate);
        result.compression = quotient_projection(red.quotiented, r + m, q.target());
        qprime = compose(result.compression, q);
    }

    result.torsionless.push_back(
        require_torsionless(qprime, m, "brunsify compressed module"));
    ResolutionData chain = chain_impl(PresentedModule(qprime), m, cfg, rng,
                                      result.attempts_used, &result.torsionless);

    ResolutionData full{ring, {}, false};
    for (const auto& d : chain.differentials) full.differentials.push_back(d);
    full.differentials.push_back(qprime);
    for (int k = 1; k < tail.length(); ++k)
        full.differentials.push_back(tail.differentials[k]);
    full.validate();

    result.exactness = check_exactness(full);
    if (!result.exactness.pass)
        throw certification_error(
            "brunsify: rewritten complex failed exactness certification at position " +
            std::to_string(result.exactness.first_fail));

    const PolyMatrix& f1 = full.differentials[0];
    std::vector<Polynomial> gens;
    for (int j = 0; j < f1.cols(); ++j) gens.push_back(f1.at(0, j));
    result.ideal = IdealData(ring, std::move(gens));
    result.complex = std::move(full);
    return result;
}

BrunsResult brunsify(const ResolutionData& res, int m, const SearchConfig& cfg) {
    res.validate();
    if (!(1 <= m && m < res.length()))
        throw error("brunsify: need 1 <= m < resolution length");
    ExactnessCertificate input_cert = check_exactness(res);
    if (!input_cert.pass)
        throw certification_error("brunsify: input complex is not exact (position " +
                                  std::to_string(input_cert.first_fail) + ")");
    ResolutionData tail{res.ring, {}, false};
    for (int k = m; k < res.length(); ++k)
        tail.differentials.push_back(res.differentials[k]);
    return brunsify_tail(tail, m, cfg);
}

std::pair<PresentedModule, ResolutionData> build_pd_module(int s, int m, uint32_t p,
                                                           const SearchConfig& cfg) {
    if (s < 1 || m < 1) throw error("build_pd_module: s and m must be at least 1");
    int d = s + m;
    Ring ring = make_ring(p, default_variable_names(d));
    std::vector<Polynomial> vars;
    for (int i = 0; i < d; ++i) vars.push_back(Polynomial::variable(ring, i));

    if (s == 1) {
        // M = R^n / R(x_1, ..., x_n)
        FreeModuleSpec src(1, std::vector<int>{1});
        FreeModuleSpec tgt(d, std::vector<int>(d, 0));
        PolyMatrix pres(ring, src, tgt);
        for (int i = 0; i < d; ++i) pres.at(i, 0) = vars[i];
        ResolutionData res{ring, {pres}, true};
        return {PresentedModule(pres), res};
    }

    ResolutionData section = koszul_section(vars, 0, s - 1);
    BrunsResult br = brunsify_tail(section, m + 1, cfg);
    const PolyMatrix& pres = br.complex.differentials[m];  // f_{m+1}
    PresentedModule M(pres);
    ResolutionData res{ring, {}, false};
    for (int k = m; k < br.complex.length(); ++k)
        res.differentials.push_back(br.complex.differentials[k]);

    if (M.rank() != m)
        throw certification_error("build_pd_module: rank is not m");
    if (minimal_generator_count(pres) > 2 * m + 1)
        throw certification_error("build_pd_module: too many generators");
    ResolutionData pruned = prune(res);
    if (pruned.length() != s)
        throw certification_error("build_pd_module: projective dimension is not s");
    if (!check_torsionless(pres, m).pass)
        throw certification_error("build_pd_module: module is not m-torsionless");
    return {M, res};
}

}  // namespace bruns
