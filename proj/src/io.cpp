#include "bruns/io.hpp"

#include "bruns/koszul.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace bruns {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

error at_line(int line, const std::string& msg) {
    return error("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& s, int line, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw at_line(line, "bad " + what + " '" + s + "'");
    }
}

}  // namespace

const PolyMatrix& SessionDocument::matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices)
        if (n == name) return m;
    throw error("no matrix named '" + name + "'");
}

bool SessionDocument::has_matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices)
        if (n == name) return true;
    return false;
}

ResolutionData infer_grading(const Ring& ring, std::vector<PolyMatrix> mats) {
    ResolutionData plain{ring, mats, false};
    if (mats.empty()) return plain;
    std::vector<int> tdeg(mats[0].rows(), 0);
    for (auto& f : mats) {
        std::vector<int> sdeg(f.cols(), 0);
        for (int j = 0; j < f.cols(); ++j) {
            bool found = false;
            for (int i = 0; i < f.rows(); ++i) {
                const Polynomial& e = f.at(i, j);
                if (e.is_zero()) continue;
                int d = 0;
                if (!e.is_homogeneous(&d)) return plain;
                int cand = d + tdeg[i];
                if (found && cand != sdeg[j]) return plain;
                sdeg[j] = cand;
                found = true;
            }
        }
        f.set_target_degrees(tdeg);
        f.set_source_degrees(sdeg);
        tdeg = sdeg;
    }
    return ResolutionData{ring, std::move(mats), false};
}

ResolutionData SessionDocument::complex_data(const std::string& name) const {
    for (const auto& [n, parts] : complexes) {
        if (n != name) continue;
        std::vector<PolyMatrix> mats;
        for (const auto& part : parts) mats.push_back(matrix(part));
        ResolutionData res = infer_grading(ring, std::move(mats));
        res.validate();
        return res;
    }
    throw error("no complex named '" + name + "'");
}

SessionDocument parse_document(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    SessionDocument doc;
    size_t idx = 0;
    auto next_content = [&]() -> bool {
        while (idx < lines.size() && trim(lines[idx]).empty()) ++idx;
        return idx < lines.size();
    };

    if (!next_content()) throw error("empty document: missing ring header");
    {
        int line = static_cast<int>(idx) + 1;
        auto toks = split_ws(lines[idx]);
        if (toks.size() != 4 || toks[0] != "ring")
            throw at_line(line, "expected 'ring <p> <vars> <order>'");
        int p = parse_int(toks[1], line, "characteristic");
        std::vector<std::string> vars = split_commas(toks[2]);
        MonomialOrder ord;
        if (toks[3] == "grevlex")
            ord = MonomialOrder::grevlex;
        else if (toks[3] == "lex")
            ord = MonomialOrder::lex;
        else
            throw at_line(line, "unknown monomial order '" + toks[3] + "'");
        try {
            doc.ring = make_ring(static_cast<uint32_t>(p), std::move(vars), ord);
        } catch (const error& e) {
            throw at_line(line, e.what());
        }
        ++idx;
    }

    while (next_content()) {
        int line = static_cast<int>(idx) + 1;
        auto toks = split_ws(lines[idx]);
        if (toks[0] == "matrix") {
            if (toks.size() != 4)
                throw at_line(line, "expected 'matrix <name> <rows> <cols>'");
            const std::string& name = toks[1];
            if (doc.has_matrix(name))
                throw at_line(line, "duplicate matrix name '" + name + "'");
            int rows = parse_int(toks[2], line, "row count");
            int cols = parse_int(toks[3], line, "column count");
            if (rows < 1 || cols < 1)
                throw at_line(line, "matrix dimensions must be positive");
            ++idx;
            std::vector<Polynomial> entries;
            for (int i = 0; i < rows; ++i) {
                if (idx >= lines.size())
                    throw at_line(static_cast<int>(idx) + 1,
                                  "unexpected end of file inside matrix '" + name + "'");
                int rline = static_cast<int>(idx) + 1;
                std::string row = trim(lines[idx]);
                if (row.empty() || row.back() != ';')
                    throw at_line(rline, "matrix row must end with ';'");
                row.pop_back();
                auto cells = split_commas(row);
                if (static_cast<int>(cells.size()) != cols)
                    throw at_line(rline, "expected " + std::to_string(cols) +
                                             " entries, found " +
                                             std::to_string(cells.size()));
                for (int j = 0; j < cols; ++j) {
                    try {
                        entries.push_back(parse_poly(doc.ring, strip_spaces(cells[j])));
                    } catch (const error& e) {
                        throw at_line(rline, "column " + std::to_string(j + 1) + ": " +
                                                 e.what());
                    }
                }
                ++idx;
            }
            doc.matrices.emplace_back(
                name, PolyMatrix(doc.ring, FreeModuleSpec(cols), FreeModuleSpec(rows),
                                 std::move(entries)));
        } else if (toks[0] == "complex") {
            if (toks.size() < 4 || toks[2] != "=")
                throw at_line(line, "expected 'complex <name> = <m1> <m2> ...'");
            const std::string& name = toks[1];
            std::vector<std::string> parts(toks.begin() + 3, toks.end());
            for (const auto& part : parts)
                if (!doc.has_matrix(part))
                    throw at_line(line, "complex '" + name +
                                            "' references unknown matrix '" + part + "'");
            doc.complexes.emplace_back(name, parts);
            try {
                doc.complex_data(name);
            } catch (const error& e) {
                throw at_line(line, "complex '" + name + "': " + e.what());
            }
            ++idx;
        } else if (toks[0] == "ideal") {
            if (toks.size() < 4 || toks[2] != "=")
                throw at_line(line, "expected 'ideal <name> = p1, p2, ...'");
            const std::string& name = toks[1];
            std::string rest = trim(lines[idx].substr(lines[idx].find('=') + 1));
            std::vector<Polynomial> gens;
            for (const auto& cell : split_commas(rest)) {
                try {
                    gens.push_back(parse_poly(doc.ring, strip_spaces(cell)));
                } catch (const error& e) {
                    throw at_line(line, std::string("ideal '") + name + "': " + e.what());
                }
            }
            doc.ideals.emplace_back(name, IdealData(doc.ring, std::move(gens)));
            ++idx;
        } else {
            throw at_line(line, "unknown block '" + toks[0] + "'");
        }
    }
    return doc;
}

std::string emit_document(const SessionDocument& doc) {
    std::ostringstream out;
    out << "ring " << doc.ring->characteristic << ' ';
    for (size_t i = 0; i < doc.ring->variables.size(); ++i) {
        if (i) out << ',';
        out << doc.ring->variables[i];
    }
    out << ' ' << (doc.ring->order == MonomialOrder::grevlex ? "grevlex" : "lex")
        << '\n';
    for (const auto& [name, m] : doc.matrices) {
        out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (j) out << ", ";
                out << m.at(i, j).str();
            }
            out << ";\n";
        }
    }
    for (const auto& [name, parts] : doc.complexes) {
        out << "complex " << name << " =";
        for (const auto& part : parts) out << ' ' << part;
        out << '\n';
    }
    for (const auto& [name, ideal] : doc.ideals) {
        out << "ideal " << name << " = ";
        if (ideal.generators.empty()) {
            out << '0';
        } else {
            for (size_t i = 0; i < ideal.generators.size(); ++i) {
                if (i) out << ", ";
                out << ideal.generators[i].str();
            }
        }
        out << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json grade_json(const Grade& g) {
    if (g.infinite) return "inf";
    return g.value;
}

}  // namespace

std::string certificate_json(const ExactnessCertificate& exact,
                             const TorsionlessCertificate* torsionless) {
    nlohmann::json j;
    nlohmann::json positions = nlohmann::json::array();
    for (const auto& pos : exact.positions) {
        positions.push_back({{"position", pos.position},
                             {"rank_module", pos.rank_module},
                             {"rank_map", pos.rank_map},
                             {"rank_next", pos.rank_next},
                             {"grade", grade_json(pos.grade_value)},
                             {"rank_ok", pos.rank_ok},
                             {"grade_ok", pos.grade_ok}});
    }
    j["exactness"] = {{"pass", exact.pass},
                      {"first_fail", exact.first_fail},
                      {"positions", positions}};
    if (torsionless) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& step : torsionless->steps) {
            steps.push_back({{"index", step.index},
                             {"grade", grade_json(step.grade_value)},
                             {"required", step.required},
                             {"ok", step.ok}});
        }
        j["torsionless"] = {{"m", torsionless->m},
                            {"pass", torsionless->pass},
                            {"resolution_ranks", torsionless->resolution.free_ranks()},
                            {"steps", steps}};
    }
    return j.dump(2) + "\n";
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path + "'");
    out << content;
}

uint64_t resolve_seed(bool given, uint64_t value) {
    if (given) return value;
    const char* env = std::getenv("BRUNS_SEED");
    if (!env) return 0;
    try {
        size_t pos = 0;
        uint64_t v = std::stoull(env, &pos);
        if (pos != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw error("BRUNS_SEED must be a non-negative integer");
    }
}

SessionDocument document_for(const ResolutionData& res, const std::string& cname) {
    SessionDocument doc;
    doc.ring = res.ring;
    std::vector<std::string> names;
    for (int k = 0; k < res.length(); ++k) {
        std::string name = "f" + std::to_string(k + 1);
        names.push_back(name);
        doc.matrices.emplace_back(name, res.differentials[k]);
    }
    doc.complexes.emplace_back(cname, names);
    return doc;
}

}  // namespace

int run_command(const std::vector<std::string>& argv) {
    CLI::App app{"finite free resolutions and three-generated ideals over F_p[x_1..x_d]"};
    app.require_subcommand(1);

    uint32_t opt_p = 32003;
    std::string opt_vars, opt_section, opt_in, opt_out, opt_matrix, opt_complex;
    int opt_max_length = 0, opt_m = 0, opt_s = 0, opt_torsionless = -1;
    uint64_t opt_seed = 0;

    CLI::App* koszul_cmd = app.add_subcommand("koszul", "Koszul complex on variables");
    koszul_cmd->add_option("--p", opt_p, "field characteristic")->capture_default_str();
    koszul_cmd->add_option("--vars", opt_vars, "comma-separated variable names")
        ->required();
    koszul_cmd->add_option("--section", opt_section,
                           "exterior power range A..B (cochain direction)");
    koszul_cmd->add_option("--out", opt_out, "output file")->required();

    CLI::App* resolve_cmd = app.add_subcommand("resolve", "free resolution of a cokernel");
    resolve_cmd->add_option("--in", opt_in, "input file")->required();
    resolve_cmd->add_option("--matrix", opt_matrix, "presentation matrix name")
        ->required();
    resolve_cmd->add_option("--max-length", opt_max_length,
                            "resolution length cap (default: variable count)");
    resolve_cmd->add_option("--out", opt_out, "output file")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "certify exactness of a complex");
    check_cmd->add_option("--in", opt_in, "input file")->required();
    check_cmd->add_option("--complex", opt_complex, "complex name")->required();
    check_cmd->add_option("--torsionless", opt_torsionless,
                          "also certify Coker(f_1) at this level");

    CLI::App* bruns_cmd =
        app.add_subcommand("brunsify", "rewrite a resolution past degree m");
    bruns_cmd->add_option("--in", opt_in, "input file")->required();
    bruns_cmd->add_option("--complex", opt_complex, "complex name")->required();
    bruns_cmd->add_option("--m", opt_m, "rewrite depth")->required();
    CLI::Option* bruns_seed = bruns_cmd->add_option("--seed", opt_seed, "search seed");
    bruns_cmd->add_option("--out", opt_out, "output file")->required();

    CLI::App* pdmod_cmd = app.add_subcommand(
        "pdmod", "m-torsionless rank-m module of projective dimension s");
    pdmod_cmd->add_option("--s", opt_s, "projective dimension")->required();
    pdmod_cmd->add_option("--m", opt_m, "torsionless level")->required();
    pdmod_cmd->add_option("--p", opt_p, "field characteristic")->capture_default_str();
    CLI::Option* pdmod_seed = pdmod_cmd->add_option("--seed", opt_seed, "search seed");
    pdmod_cmd->add_option("--out", opt_out, "output file")->required();

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (koszul_cmd->parsed()) {
            Ring ring = make_ring(opt_p, split_commas(opt_vars));
            std::vector<Polynomial> seq;
            for (int i = 0; i < ring->nvars(); ++i)
                seq.push_back(Polynomial::variable(ring, i));
            ResolutionData res;
            if (!opt_section.empty()) {
                size_t dots = opt_section.find("..");
                if (dots == std::string::npos)
                    throw error("--section expects A..B");
                int from = parse_int(opt_section.substr(0, dots), 0, "section start");
                int to = parse_int(opt_section.substr(dots + 2), 0, "section end");
                res = koszul_section(seq, from, to);
            } else {
                res = koszul_complex(seq);
            }
            write_file(opt_out, emit_document(document_for(res, "K")));
            return 0;
        }
        if (resolve_cmd->parsed()) {
            SessionDocument doc = parse_document(read_file(opt_in));
            PolyMatrix f = infer_grading(doc.ring, {doc.matrix(opt_matrix)})
                               .differentials[0];
            int cap = opt_max_length > 0 ? opt_max_length : doc.ring->nvars();
            ResolutionData res = resolve(f, cap);
            write_file(opt_out, emit_document(document_for(res, "res")));
            return 0;
        }
        if (check_cmd->parsed()) {
            SessionDocument doc = parse_document(read_file(opt_in));
            ResolutionData res = doc.complex_data(opt_complex);
            ExactnessCertificate exact = check_exactness(res);
            bool pass = exact.pass;
            if (opt_torsionless >= 0) {
                TorsionlessCertificate tors =
                    check_torsionless(res.differentials[0], opt_torsionless);
                pass = pass && tors.pass;
                std::cout << certificate_json(exact, &tors);
            } else {
                std::cout << certificate_json(exact, nullptr);
            }
            return pass ? 0 : 2;
        }
        if (bruns_cmd->parsed()) {
            SessionDocument doc = parse_document(read_file(opt_in));
            ResolutionData res = doc.complex_data(opt_complex);
            SearchConfig cfg;
            cfg.seed = resolve_seed(!bruns_seed->empty(), opt_seed);
            BrunsResult br = brunsify(res, opt_m, cfg);
            SessionDocument out = document_for(br.complex, "B");
            out.ideals.emplace_back("a", br.ideal);
            write_file(opt_out, emit_document(out));
            const TorsionlessCertificate* last =
                br.torsionless.empty() ? nullptr : &br.torsionless.back();
            std::cout << certificate_json(br.exactness, last);
            return 0;
        }
        if (pdmod_cmd->parsed()) {
            SearchConfig cfg;
            cfg.seed = resolve_seed(!pdmod_seed->empty(), opt_seed);
            auto [M, res] = build_pd_module(opt_s, opt_m, opt_p, cfg);
            write_file(opt_out, emit_document(document_for(res, "res")));
            return 0;
        }
    } catch (const certification_error& e) {
        std::cerr << "certification failed: " << e.what() << '\n';
        return 2;
    } catch (const search_exhausted& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace bruns
