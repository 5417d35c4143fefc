#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "census/c6.hpp"
#include "census/enumerate.hpp"
#include "census/lens.hpp"
#include "census/surface.hpp"

namespace {

using namespace census;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Output {
    std::string path; // empty = stdout
    std::ostringstream buf;

    ~Output() = default;
    void flush() {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            f << buf.str();
        }
    }
};

int cmd_lens_census(i64 cmax, const std::string& format, bool check, Output& out) {
    auto rows = lens_census(cmax);
    if (format == "json") {
        json j = json::array();
        for (const auto& row : rows) {
            json reps = json::array();
            for (const auto& l : row.classes) reps.push_back(l.str());
            j.push_back({{"complexity", row.complexity},
                         {"count", row.classes.size()},
                         {"representatives", reps}});
        }
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "#complexity\tcount\trepresentatives\n";
        for (const auto& row : rows) {
            out.buf << row.complexity << "\t" << row.classes.size() << "\t";
            for (size_t i = 0; i < row.classes.size(); ++i)
                out.buf << (i ? "," : "") << row.classes[i].str();
            out.buf << "\n";
        }
    }
    if (check) {
        validate_lens_formula(200);
        const auto& expected = lens_reference_counts();
        for (size_t c = 0; c < rows.size() && c < expected.size(); ++c) {
            if (i64(rows[c].classes.size()) != expected[c]) {
                std::cerr << "lens-census: complexity " << c << " has " << rows[c].classes.size()
                          << " classes, expected " << expected[c] << "\n";
                out.flush();
                return kExitMismatch;
            }
        }
    }
    out.flush();
    return kExitOk;
}

struct SpineCounts {
    i64 classes = 0, survivors = 0, orientable = 0, nonorientable = 0, sigma_nonempty = 0;
};

SpineCounts spine_counts(const EnumerationResult& r) {
    SpineCounts c;
    c.classes = i64(r.tables.size());
    for (const auto& t : r.tables) {
        bool ori = w1_cocycle(t).orientable;
        ori ? ++c.orientable : ++c.nonorientable;
        StandardSpine sp = dual_spine(t);
        if (prune_nonminimal(sp).minimal_candidate) ++c.survivors;
        if (!stiefel_whitney_surface(sp).empty()) ++c.sigma_nonempty;
    }
    return c;
}

int cmd_enumerate_spines(int n, int workers, const std::string& format, bool check,
                         const std::string& fixtures_dir, const std::string& manifest_path,
                         Output& out) {
    auto result = enumerate_one_vertex(n, {}, workers);
    SpineCounts c = spine_counts(result);

    if (format == "json") {
        json j = {{"n", n},
                  {"classes", c.classes},
                  {"criterion1_survivors", c.survivors},
                  {"orientable", c.orientable},
                  {"nonorientable", c.nonorientable},
                  {"sigma_nonempty", c.sigma_nonempty},
                  {"signatures", result.signatures}};
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "#n\tclasses\tcriterion1_survivors\torientable\tnonorientable\tsigma_nonempty\n";
        out.buf << n << "\t" << c.classes << "\t" << c.survivors << "\t" << c.orientable << "\t"
                << c.nonorientable << "\t" << c.sigma_nonempty << "\n";
    }

    if (!fixtures_dir.empty()) {
        std::filesystem::path dir = std::filesystem::path(fixtures_dir) / ("n" + std::to_string(n));
        std::filesystem::create_directories(dir);
        std::ofstream sig(dir / "sig.txt", std::ios::binary);
        for (const auto& s : result.signatures) sig << s << "\n";
        std::ofstream tab(dir / "tables.txt", std::ios::binary);
        for (size_t i = 0; i < result.tables.size(); ++i) {
            tab << "# " << result.signatures[i] << "\n"
                << serialize_gluing_table(result.tables[i]) << "\n";
        }
    }

    if (check) {
        std::ifstream mf(manifest_path);
        if (!mf) {
            std::cerr << "enumerate-spines: cannot open manifest " << manifest_path << "\n";
            return kExitUsage;
        }
        bool matched = false;
        std::string line;
        while (std::getline(mf, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            SpineCounts want;
            int wn;
            if (!(ls >> wn >> want.classes >> want.survivors >> want.orientable >>
                  want.nonorientable >> want.sigma_nonempty))
                continue;
            if (wn != n) continue;
            matched = true;
            if (want.classes != c.classes || want.survivors != c.survivors ||
                want.orientable != c.orientable || want.nonorientable != c.nonorientable ||
                want.sigma_nonempty != c.sigma_nonempty) {
                std::cerr << "enumerate-spines: counts for n=" << n
                          << " drifted from the frozen manifest\n";
                out.flush();
                return kExitMismatch;
            }
        }
        if (!matched) {
            std::cerr << "enumerate-spines: no manifest row for n=" << n << "\n";
            out.flush();
            return kExitMismatch;
        }
    }
    out.flush();
    return kExitOk;
}

json census_row_json(const CensusRow& r) {
    json j = {{"complexity", r.complexity},
              {"description", r.description},
              {"geometry", geometry_name(r.geometry)},
              {"ledger", r.ledger},
              {"h1", r.h1.str()},
              {"construction", r.trace},
              {"fibrations", r.fibrations}};
    if (r.chi) j["chi_orb"] = r.chi->str();
    if (r.monodromy) j["monodromy"] = r.monodromy->str();
    return j;
}

int cmd_nonorientable_census(const std::string& format, bool check, Output& out) {
    auto c6 = nonorientable_c6_census();
    auto c7 = c7_examples();
    std::vector<CensusRow> rows = c6;
    rows.insert(rows.end(), c7.begin(), c7.end());

    if (format == "json") {
        json j = json::array();
        for (const auto& r : rows) j.push_back(census_row_json(r));
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "#complexity\tdescription\tgeometry\tchi_orb\tmonodromy\tledger\th1\tfibrations"
                   "\tconstruction\n";
        for (const auto& r : rows) {
            out.buf << r.complexity << "\t" << r.description << "\t" << geometry_name(r.geometry)
                    << "\t" << (r.chi ? r.chi->str() : "-") << "\t"
                    << (r.monodromy ? r.monodromy->str() : "-") << "\t" << r.ledger << "\t"
                    << r.h1.str() << "\t";
            for (size_t i = 0; i < r.fibrations.size(); ++i)
                out.buf << (i ? "," : "") << r.fibrations[i];
            if (r.fibrations.empty()) out.buf << "-";
            out.buf << "\t" << r.trace << "\n";
        }
    }

    if (check) {
        int flat = 0, sol6 = 0, h2 = 0, sol7 = 0;
        for (const auto& r : c6) {
            if (r.ledger != 6) { std::cerr << "census: c=6 row with ledger != 6\n"; out.flush(); return kExitMismatch; }
            if (r.geometry == Geometry::E3) ++flat;
            if (r.geometry == Geometry::Sol) {
                ++sol6;
                if (!r.normal_form || !(*r.normal_form == Mat2{1, 1, 1, 0})) {
                    std::cerr << "census: Sol normal form at c=6 is not [[1,1],[1,0]]\n";
                    out.flush();
                    return kExitMismatch;
                }
            }
        }
        for (const auto& r : c7) {
            if (r.ledger != 7) { std::cerr << "census: c=7 row with ledger != 7\n"; out.flush(); return kExitMismatch; }
            if (r.geometry == Geometry::H2xR) {
                ++h2;
                if (!r.chi || !(*r.chi == Rational(-1, 6))) {
                    std::cerr << "census: c=7 Seifert row without chi_orb = -1/6\n";
                    out.flush();
                    return kExitMismatch;
                }
            }
            if (r.geometry == Geometry::Sol) {
                ++sol7;
                if (!r.monodromy || !(*r.monodromy == Mat2{2, 1, 1, 0})) {
                    std::cerr << "census: c=7 Sol monodromy is not [[2,1],[1,0]]\n";
                    out.flush();
                    return kExitMismatch;
                }
            }
        }
        if (c6.size() != 5 || flat != 4 || sol6 != 1 || h2 != 2 || sol7 != 1) {
            std::cerr << "census: class counts drifted (c6=" << c6.size() << " flat=" << flat
                      << " sol6=" << sol6 << " h2=" << h2 << " sol7=" << sol7 << ")\n";
            out.flush();
            return kExitMismatch;
        }
    }
    out.flush();
    return kExitOk;
}

int cmd_verify_lemmas(int n, int workers, Output& out) {
    out.buf << "#n\tsig\tcheck\tstatus\n";
    i64 checked = 0, failures = 0;
    for (int k = 1; k <= n; ++k) {
        auto result = enumerate_one_vertex(k, {}, workers);
        for (size_t i = 0; i < result.tables.size(); ++i) {
            const auto& t = result.tables[i];
            if (w1_cocycle(t).orientable) continue;
            StandardSpine sp = dual_spine(t);
            if (!prune_nonminimal(sp).minimal_candidate) continue;
            ++checked;
            SurfaceInSpine sigma = stiefel_whitney_surface(sp);
            SurfaceTopology topo = surface_topology(sp, sigma);
            SigmaStats st = sigma_stats(sp, sigma);
            auto report = [&](const std::string& name, bool ok) {
                out.buf << k << "\t" << result.signatures[i] << "\t" << name << "\t"
                        << (ok ? "ok" : "COUNTEREXAMPLE") << "\n";
                if (!ok) ++failures;
            };
            report("euler-identity", st.v3 + st.v4 == st.f - st.chi);
            report("vertex-bound", 2 * st.v3 + st.v4 <= k);
            report("components<=2", topo.components <= 2);
        }
    }
    out.buf << "# checked " << checked << " non-orientable minimal-candidate spines, " << failures
            << " counterexamples\n";
    out.flush();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census toolkit: one-vertex triangulations, standard spines, theta-graph calculus,"
                 " and small non-orientable censuses"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "tsv", out_path, fixtures_dir = "fixtures",
                manifest_path = "data/enumeration_manifest.tsv";
    bool check = false;
    int workers = 1;
    i64 cmax = 9;
    int n = 3;

    app.add_option("--format", format, "Output format: tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--out", out_path, "Write the table to this path instead of stdout");
    app.add_flag("--check", check, "Verify embedded expected values; exit 2 on drift");
    app.add_option("--workers", workers, "Worker threads for enumeration")->check(CLI::Range(1, 64));

    auto* lens = app.add_subcommand("lens-census", "Lens space complexity census");
    lens->add_option("--cmax", cmax, "Largest complexity")->check(CLI::Range(i64(0), i64(12)));

    auto* enumsp = app.add_subcommand("enumerate-spines", "One-vertex triangulation census");
    enumsp->add_option("--n", n, "Tetrahedron count (6 is long-running)")->check(CLI::Range(1, 6));
    enumsp->add_option("--fixtures", fixtures_dir, "Directory for signature fixtures");
    enumsp->add_option("--manifest", manifest_path, "Frozen counts manifest for --check");

    auto* nono = app.add_subcommand("nonorientable-census",
                                    "Non-orientable complexity-6 census and complexity-7 examples");

    auto* lemmas = app.add_subcommand("verify-lemmas",
                                      "Surface-counting identities on enumerated spines");
    lemmas->add_option("--n", n, "Largest tetrahedron count")->check(CLI::Range(1, 5));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitUsage;
    }

    Output out;
    out.path = out_path;
    try {
        if (lens->parsed()) return cmd_lens_census(cmax, format, check, out);
        if (enumsp->parsed())
            return cmd_enumerate_spines(n, workers, format, check, fixtures_dir, manifest_path, out);
        if (nono->parsed()) return cmd_nonorientable_census(format, check, out);
        if (lemmas->parsed()) return cmd_verify_lemmas(n, workers, out);
    } catch (const census::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
