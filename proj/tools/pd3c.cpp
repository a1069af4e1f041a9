// pd3c - Groebner bases, Hilbert data, minimal free resolutions and linkage
// over prime finite fields, plus the built-in three-cubics construction.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pd3c/construct.hpp"
#include "pd3c/hilbert.hpp"
#include "pd3c/io.hpp"

using nlohmann::json;
using namespace pd3c;

namespace {

// user-input problem detected past the parser (bad grading, ring mismatch...)
struct InputError {
    std::string msg;
};

IdealFileContents load_file(const std::string& path) {
    try {
        if (path == "-") return read_ideal_file(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError{path + ": cannot open"};
        return read_ideal_file(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.col) +
                             ": error: " + e.what(),
                         e.line, e.col);
    }
}

Ideal load_ideal(const std::string& path) {
    IdealFileContents c = load_file(path);
    try {
        return Ideal(c.ring, std::move(c.gens));
    } catch (const Error& e) {
        throw InputError{path + ": " + e.what()};
    }
}

json ring_json(const PolyRing& r) {
    return json{{"prime", r.field().p()}, {"vars", r.names()}, {"order", r.order().name()}};
}

json ideal_json(const Ideal& I) {
    json gens = json::array();
    for (const Polynomial& g : I.gens()) gens.push_back(polynomial_to_string(g));
    return json{{"ring", ring_json(*I.ring())}, {"generators", gens}};
}

void print_ideal(const Ideal& I, bool as_json) {
    if (as_json) {
        std::cout << ideal_json(I).dump(2) << "\n";
    } else {
        std::cout << ideal_to_text(I);
    }
}

json betti_json(const BettiTable& b) {
    json entries = json::array();
    for (const auto& [ij, v] : b.entries()) entries.push_back({ij.first, ij.second, v});
    return json{{"entries", entries}, {"totals", b.totals()}};
}

json report_json(const PipelineReport& rep) {
    json j{{"prime", rep.prime},
           {"seed", rep.seed},
           {"retries_used", rep.retries_used},
           {"pd", rep.pd},
           {"betti", betti_json(rep.betti)}};
    j["link_gen_degrees"] = rep.link_gen_degrees ? json(*rep.link_gen_degrees) : json();
    j["p1p2_degree_check"] = rep.p1p2_degree_check ? json(*rep.p1p2_degree_check) : json();
    j["unmix_gen_degrees"] = rep.unmix_gen_degrees ? json(*rep.unmix_gen_degrees) : json();
    j["top_check"] = rep.top_check ? json(*rep.top_check) : json();
    return j;
}

void print_report(const PipelineReport& rep, bool as_json) {
    if (as_json) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        std::cout << rep.render_text() << "---\n" << rep.render_kv();
    }
}

std::string zpoly_text(const std::vector<long long>& c) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        long long v = c[k];
        if (first) {
            out += v < 0 ? "-" : "";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        long long a = v < 0 ? -v : v;
        if (a != 1 || k == 0) out += std::to_string(a);
        if (k > 0) {
            if (a != 1) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
        first = false;
    }
    return out.empty() ? "0" : out;
}

std::string module_text(const FreeModule& f) {
    if (f.rank() == 0) return "0";
    // twists store generator degrees; display as R(-d), ascending d
    std::map<int, int> counts;
    for (int t : f.twists()) counts[t]++;
    std::string out;
    for (auto& [d, k] : counts) {
        if (!out.empty()) out += " + ";
        out += "R";
        if (d != 0) out += "(" + std::to_string(-d) + ")";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

int default_retries() {
    if (const char* env = std::getenv("PD3C_MAX_RETRIES")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            throw InputError{"PD3C_MAX_RETRIES is not an integer"};
        }
    }
    return 20;
}

std::vector<uint32_t> var_indices(const PolyRing& r, const std::string& csv_names) {
    std::vector<uint32_t> out;
    std::stringstream ss(csv_names);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        int k = r.var_index(name);
        if (k < 0) throw InputError{"unknown variable in --vars: " + name};
        out.push_back(static_cast<uint32_t>(k));
    }
    if (out.empty()) throw InputError{"--vars lists no variables"};
    return out;
}

// map file: a 'source' header, a 'target' header, an 'images' section with
// one polynomial per source variable (in target variables), and an optional
// 'relations' section with target polynomials
RingMapSpec load_map_file(const std::string& path) {
    std::ifstream fin;
    std::istream* in = &std::cin;
    if (path != "-") {
        fin.open(path);
        if (!fin) throw InputError{path + ": cannot open"};
        in = &fin;
    }
    auto fail = [&](const std::string& msg, int line) {
        throw ParseError(path + ":" + std::to_string(line) + ":1: error: " + msg, line, 1);
    };
    RingPtr source, target;
    std::vector<Polynomial> images, relations;
    enum class Section { None, Images, Relations } sec = Section::None;
    std::string raw;
    int line_no = 0;
    while (std::getline(*in, raw)) {
        ++line_no;
        std::string s = raw.substr(0, raw.find('#'));
        if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream hs(s);
        std::string kw;
        hs >> kw;
        if (kw == "source" || kw == "target") {
            std::string rest;
            std::getline(hs, rest);
            try {
                std::istringstream one("ring" + rest + "\n");
                IdealFileContents c = read_ideal_file(one);
                (kw == "source" ? source : target) = c.ring;
            } catch (const ParseError& e) {
                fail(e.what(), line_no);
            }
            continue;
        }
        if (kw == "images") {
            sec = Section::Images;
            continue;
        }
        if (kw == "relations") {
            sec = Section::Relations;
            continue;
        }
        if (!target) fail("polynomial before the 'target' header", line_no);
        if (sec == Section::None) fail("polynomial outside 'images'/'relations'", line_no);
        try {
            Polynomial p = polynomial_from_string(target, s, line_no);
            (sec == Section::Images ? images : relations).push_back(std::move(p));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.col) +
                                 ": error: " + e.what(),
                             e.line, e.col);
        }
    }
    if (!source || !target) fail("map file needs 'source' and 'target' headers", line_no);
    return RingMapSpec{source, target, std::move(relations), std::move(images)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational commutative algebra over prime fields"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string file_a, file_b, order_name, vars_csv;
    uint32_t prime = 32003;
    uint64_t seed = 42;
    int max_retries = -1;

    auto add_file = [&](CLI::App* c) { c->add_option("file", file_a, "ideal file ('-' for stdin)")->required(); };
    auto add_two = [&](CLI::App* c) {
        c->add_option("I", file_a, "left ideal file")->required();
        c->add_option("J", file_b, "right ideal file")->required();
    };

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_file(gb);
    gb->add_option("--order", order_name, "override the order: grevlex, lex or grlex");
    CLI::App* mingens = app.add_subcommand("mingens", "minimal homogeneous generators");
    add_file(mingens);
    CLI::App* dim_cmd = app.add_subcommand("dim", "Krull dimension of R/I");
    add_file(dim_cmd);
    CLI::App* degree_cmd = app.add_subcommand("degree", "multiplicity of R/I");
    add_file(degree_cmd);
    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of R/I");
    add_file(hilbert_cmd);
    CLI::App* colon = app.add_subcommand("colon", "ideal quotient I : J");
    add_two(colon);
    CLI::App* inter = app.add_subcommand("intersect", "ideal intersection");
    add_two(inter);
    CLI::App* sat = app.add_subcommand("saturate", "saturation I : J^inf");
    add_two(sat);
    CLI::App* elim = app.add_subcommand("eliminate", "eliminate variables");
    add_file(elim);
    elim->add_option("--vars", vars_csv, "comma-separated variables to drop")->required();
    CLI::App* kernel_cmd = app.add_subcommand("kernel", "kernel of a ring map");
    kernel_cmd->add_option("file", file_a, "map file ('-' for stdin)")->required();
    CLI::App* unmixed = app.add_subcommand("unmixed", "unmixed part via double linkage");
    add_file(unmixed);
    unmixed->add_option("--seed", seed, "random seed");
    unmixed->add_option("--max-retries", max_retries, "genericity retry budget");
    CLI::App* res_cmd = app.add_subcommand("res", "minimal free resolution of R/I");
    add_file(res_cmd);
    CLI::App* betti = app.add_subcommand("betti", "graded Betti table of R/I");
    add_file(betti);
    CLI::App* pd5 = app.add_subcommand("pd5", "construct three cubics with pd 5");
    pd5->add_option("--prime", prime, "field characteristic (odd prime)");
    pd5->add_option("--seed", seed, "random seed");
    pd5->add_option("--max-retries", max_retries, "genericity retry budget");
    CLI::App* verify = app.add_subcommand("verify-paper-example", "check the built-in F_3 example");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (max_retries < 0) max_retries = default_retries();

        if (gb->parsed()) {
            Ideal I = load_ideal(file_a);
            if (!order_name.empty()) {
                MonomialOrder ord = [&] {
                    try {
                        return order_by_name(order_name);
                    } catch (const Error&) {
                        throw InputError{"unknown order: " + order_name};
                    }
                }();
                RingPtr reordered = PolyRing::with_order(I.ring(), ord);
                std::vector<Polynomial> gens;
                for (const Polynomial& g : I.gens()) {
                    std::vector<Term> ts(g.terms().begin(), g.terms().end());
                    gens.push_back(Polynomial::from_terms(reordered, std::move(ts)));
                }
                I = Ideal(reordered, std::move(gens));
            }
            print_ideal(Ideal(I.ring(), I.groebner().elements()), as_json);
        } else if (mingens->parsed()) {
            Ideal I = load_ideal(file_a);
            print_ideal(Ideal(I.ring(), minimal_generators(I)), as_json);
        } else if (dim_cmd->parsed()) {
            int d = dimension(load_ideal(file_a));
            if (as_json)
                std::cout << json{{"dim", d}}.dump(2) << "\n";
            else
                std::cout << d << "\n";
        } else if (degree_cmd->parsed()) {
            long long e = degree(load_ideal(file_a));
            if (as_json)
                std::cout << json{{"degree", e}}.dump(2) << "\n";
            else
                std::cout << e << "\n";
        } else if (hilbert_cmd->parsed()) {
            Ideal I = load_ideal(file_a);
            HilbertSeries h = hilbert_series(I);
            int codim = static_cast<int>(h.nvars) - h.dim;
            if (as_json) {
                std::cout << json{{"numerator", h.numerator},
                                  {"reduced", h.reduced},
                                  {"dim", h.dim},
                                  {"codim", codim},
                                  {"degree", h.degree()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "numerator: " << zpoly_text(h.numerator) << "\n";
                std::cout << "reduced: " << zpoly_text(h.reduced) << "\n";
                std::cout << "dim: " << h.dim << "\n";
                std::cout << "codim: " << codim << "\n";
                std::cout << "degree: " << h.degree() << "\n";
            }
        } else if (colon->parsed() || inter->parsed() || sat->parsed()) {
            Ideal I = load_ideal(file_a);
            Ideal J = load_ideal(file_b);
            try {
                Ideal K = colon->parsed() ? quotient(I, J)
                          : inter->parsed() ? intersect(I, J)
                                            : saturate(I, J);
                print_ideal(K, as_json);
            } catch (const RingMismatch& e) {
                throw InputError{e.what()};
            }
        } else if (elim->parsed()) {
            Ideal I = load_ideal(file_a);
            print_ideal(eliminate(I, var_indices(*I.ring(), vars_csv)), as_json);
        } else if (kernel_cmd->parsed()) {
            RingMapSpec spec = load_map_file(file_a);
            try {
                print_ideal(ring_map_kernel(spec), as_json);
            } catch (const DegreeMismatch& e) {
                throw InputError{e.what()};
            } catch (const ContractViolation& e) {
                throw InputError{e.what()};
            } catch (const RingMismatch& e) {
                throw InputError{e.what()};
            }
        } else if (unmixed->parsed()) {
            Ideal I = load_ideal(file_a);
            SeededRng rng(seed);
            print_ideal(unmixed_part(I, rng, max_retries), as_json);
        } else if (res_cmd->parsed()) {
            Ideal I = load_ideal(file_a);
            Resolution r = minimize(free_resolution(I));
            if (as_json) {
                json mods = json::array();
                for (size_t i = 0; i <= r.length(); ++i) mods.push_back(r.module(i).twists());
                std::cout << json{{"modules", mods}, {"pd", r.length()}}.dump(2) << "\n";
            } else {
                for (size_t i = 0; i <= r.length(); ++i)
                    std::cout << i << ": " << module_text(r.module(i)) << "\n";
            }
        } else if (betti->parsed()) {
            Ideal I = load_ideal(file_a);
            BettiTable b = betti_table(minimize(free_resolution(I)));
            if (as_json)
                std::cout << betti_json(b).dump(2) << "\n";
            else
                std::cout << b.render_text();
        } else if (pd5->parsed()) {
            print_report(pd5_pipeline(prime, seed, max_retries), as_json);
        } else if (verify->parsed()) {
            print_report(verify_paper_example(), as_json);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.msg << "\n";
        return 2;
    } catch (const GenericityFailure& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return 1;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
