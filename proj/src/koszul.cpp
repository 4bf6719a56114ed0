#include "bruns/koszul.hpp"

#include <map>

namespace bruns {

KoszulSpec::KoszulSpec(std::vector<Polynomial> seq) : sequence(std::move(seq)) {
    if (sequence.empty()) throw error("Koszul sequence must be nonempty");
    for (const auto& f : sequence)
        if (f.is_zero()) throw error("Koszul sequence entries must be nonzero");
}

namespace {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    if (k == 0) out = {{}};
    return out;
}

// differential wedge^k -> wedge^{k-1} of the Koszul complex
PolyMatrix koszul_differential(const std::vector<Polynomial>& seq, int k) {
    const Ring& ring = seq[0].ring();
    int n = static_cast<int>(seq.size());
    auto srcs = subsets_lex(n, k);
    auto tgts = subsets_lex(n, k - 1);
    std::map<std::vector<int>, int> tgt_index;
    for (size_t i = 0; i < tgts.size(); ++i) tgt_index[tgts[i]] = static_cast<int>(i);

    std::vector<int> seq_degs(n);
    for (int i = 0; i < n; ++i) seq_degs[i] = std::max(0, seq[i].degree());
    auto subset_degree = [&](const std::vector<int>& s) {
        int d = 0;
        for (int i : s) d += seq_degs[i];
        return d;
    };

    std::vector<int> src_degs, tgt_degs;
    for (const auto& s : srcs) src_degs.push_back(subset_degree(s));
    for (const auto& s : tgts) tgt_degs.push_back(subset_degree(s));

    PolyMatrix d(ring, FreeModuleSpec(static_cast<int>(srcs.size()), src_degs),
                 FreeModuleSpec(static_cast<int>(tgts.size()), tgt_degs));
    for (size_t j = 0; j < srcs.size(); ++j) {
        const auto& S = srcs[j];
        for (int pos = 0; pos < k; ++pos) {
            std::vector<int> T = S;
            int elem = T[pos];
            T.erase(T.begin() + pos);
            int i = tgt_index.at(T);
            Polynomial entry = pos % 2 == 0 ? seq[elem] : -seq[elem];
            d.at(i, static_cast<int>(j)) = std::move(entry);
        }
    }
    return d;
}

}  // namespace

ResolutionData koszul_complex(const std::vector<Polynomial>& seq) {
    KoszulSpec spec(seq);
    const Ring& ring = seq[0].ring();
    int n = static_cast<int>(seq.size());
    ResolutionData res{ring, {}, false};
    for (int k = 1; k <= n; ++k)
        res.differentials.push_back(koszul_differential(seq, k));
    return res;
}

ResolutionData koszul_section(const std::vector<Polynomial>& seq, int from_power,
                              int to_power) {
    KoszulSpec spec(seq);
    const Ring& ring = seq[0].ring();
    int n = static_cast<int>(seq.size());
    if (!(0 <= from_power && from_power < to_power && to_power <= n))
        throw error("koszul_section: exterior power bounds out of range");
    ResolutionData res{ring, {}, false};
    // cochain maps wedge^k -> wedge^{k+1} as transposes of the chain
    // differentials; F_j = wedge^{to-j}, degrees chosen so entries sit in
    // their exact homogeneous slot
    int total = 0;
    for (const auto& f : seq) total += std::max(0, f.degree());
    for (int k = to_power; k > from_power; --k) {
        PolyMatrix d = koszul_differential(seq, k);
        PolyMatrix lambda = dual(d);  // wedge^{k-1} -> wedge^k
        // replace the negated dual degrees by the cochain grading
        std::vector<int> src_degs, tgt_degs;
        for (int deg : *d.target().degrees) src_degs.push_back(total - deg);
        for (int deg : *d.source().degrees) tgt_degs.push_back(total - deg);
        lambda.set_source_degrees(std::move(src_degs));
        lambda.set_target_degrees(std::move(tgt_degs));
        res.differentials.push_back(std::move(lambda));
    }
    return res;
}

}  // namespace bruns
