// symrep: exact representation theory of the symmetric groups on the
// command line. Data goes to stdout, diagnostics to stderr.

#include "symrep/characters.hpp"
#include "symrep/config.hpp"
#include "symrep/content.hpp"
#include "symrep/oracle.hpp"
#include "symrep/representations.hpp"
#include "symrep/text.hpp"
#include "symrep/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace symrep;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeCap = 3;

int run_partitions(int n, bool as_json) {
    std::vector<Partition> parts = enumerate_partitions(n);
    if (as_json) {
        json out = json::array();
        for (const Partition& p : parts) out.push_back(format_partition(p));
        std::cout << out.dump() << "\n";
    } else {
        for (const Partition& p : parts) std::cout << format_partition(p) << "\n";
    }
    return 0;
}

int run_tableaux(const std::string& shape_text, bool as_json) {
    SkewShape shape = parse_shape(shape_text);
    std::vector<StandardTableau> tableaux = enumerate_tableaux(shape);
    if (as_json) {
        json out;
        out["shape"] = format_shape(shape);
        out["count"] = tableaux.size();
        out["tableaux"] = json::array();
        for (const StandardTableau& t : tableaux) {
            json item;
            item["rows"] = format_tableau(t);
            item["content"] = t.content_sequence();
            out["tableaux"].push_back(item);
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const StandardTableau& t : tableaux) {
            std::cout << format_tableau(t) << "\t" << format_content(t.content_sequence())
                      << "\n";
        }
    }
    return 0;
}

int run_dim(const std::string& shape_text) {
    std::cout << tableau_count(parse_shape(shape_text)) << "\n";
    return 0;
}

int run_spectrum(int n, bool as_json, bool bruteforce) {
    std::vector<Partition> shapes = enumerate_partitions(n);
    if (bruteforce) {
        // cross-check the enumeration against the regular-module eigenvalues
        std::map<std::vector<int>, std::size_t> expected;
        for (const Partition& shape : shapes) {
            auto tableaux = enumerate_tableaux(SkewShape(shape));
            for (const StandardTableau& t : tableaux) {
                expected[t.content_sequence()] = tableaux.size();
            }
        }
        for (const SpectrumPoint& point : spectrum_bruteforce(n)) {
            auto it = expected.find(point.weight);
            if (it == expected.end() || it->second != point.multiplicity) {
                std::cerr << "mismatch at " << format_content(point.weight) << "\n";
                return kExitVerifyFailed;
            }
        }
    }
    if (as_json) {
        json out;
        out["n"] = n;
        out["shapes"] = json::array();
        for (const Partition& shape : shapes) {
            json entry;
            entry["shape"] = format_partition(shape);
            entry["contents"] = json::array();
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                entry["contents"].push_back(t.content_sequence());
            }
            entry["dim"] = entry["contents"].size();
            out["shapes"].push_back(entry);
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const Partition& shape : shapes) {
            auto tableaux = enumerate_tableaux(SkewShape(shape));
            std::cout << format_partition(shape) << " (dim " << tableaux.size() << ")\n";
            for (const StandardTableau& t : tableaux) {
                std::cout << "  " << format_content(t.content_sequence());
                if (bruteforce) std::cout << "  x" << tableaux.size();
                std::cout << "\n";
            }
        }
    }
    return 0;
}

void print_matrix_json(const RepMatrix& m, const std::string& generator_or_perm,
                       int generator_index) {
    // hand-rolled so orthogonal entries keep 17 significant digits
    std::cout << "{\"shape\":\"" << format_shape(m.shape) << "\",";
    std::cout << "\"form\":\"" << (m.form == FormKind::Seminormal ? "seminormal" : "orthogonal")
              << "\",";
    std::cout << "\"basis\":[";
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << "\"" << format_tableau(m.basis[i]) << "\"";
    }
    std::cout << "],";
    if (generator_index > 0) {
        std::cout << "\"generator\":" << generator_index << ",";
    } else {
        std::cout << "\"permutation\":\"" << generator_or_perm << "\",";
    }
    std::cout << "\"rows\":[";
    std::size_t dim = m.basis.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (i > 0) std::cout << ",";
        std::cout << "[";
        for (std::size_t j = 0; j < dim; ++j) {
            if (j > 0) std::cout << ",";
            if (const auto* exact = std::get_if<Matrix<Rational>>(&m.entries)) {
                std::cout << "\"" << to_string((*exact)(i, j)) << "\"";
            } else {
                std::cout << format_double17(std::get<Matrix<double>>(m.entries)(i, j));
            }
        }
        std::cout << "]";
    }
    std::cout << "]}" << "\n";
}

void print_matrix_plain(const RepMatrix& m) {
    std::size_t dim = m.basis.size();
    for (std::size_t i = 0; i < dim; ++i) {
        std::cout << format_tableau(m.basis[i]) << "\t";
        for (std::size_t j = 0; j < dim; ++j) {
            if (j > 0) std::cout << " ";
            if (const auto* exact = std::get_if<Matrix<Rational>>(&m.entries)) {
                std::cout << to_string((*exact)(i, j));
            } else {
                std::cout << format_double17(std::get<Matrix<double>>(m.entries)(i, j));
            }
        }
        std::cout << "\n";
    }
}

int run_matrix(const std::string& shape_text, int generator, const std::string& perm_cycles,
               const std::string& one_line, const std::string& form_name, bool as_json) {
    SkewShape shape = parse_shape(shape_text);
    FormKind form = form_name == "orthogonal" ? FormKind::Orthogonal : FormKind::Seminormal;
    int sources = (generator > 0 ? 1 : 0) + (perm_cycles.empty() ? 0 : 1) +
                  (one_line.empty() ? 0 : 1);
    if (sources != 1) {
        throw std::invalid_argument("matrix needs exactly one of --gen, --perm, --oneline");
    }
    RepMatrix m{shape, form, {}, {}};
    std::string label;
    if (generator > 0) {
        m = coxeter_matrix(shape, generator, form);
    } else {
        Permutation g = perm_cycles.empty() ? parse_one_line(one_line)
                                            : parse_cycles(perm_cycles, shape.box_count());
        if (!one_line.empty() && g.degree() != shape.box_count()) {
            throw std::invalid_argument("one-line degree does not match the shape");
        }
        label = format_cycles(g);
        m = permutation_matrix(shape, g, form);
    }
    if (as_json) {
        print_matrix_json(m, label, generator);
    } else {
        print_matrix_plain(m);
    }
    return 0;
}

int run_character(const std::string& shape_text, const std::string& type_text) {
    SkewShape shape = parse_shape(shape_text);
    CycleType rho = parse_partition(type_text);
    std::cout << mn_character(shape, rho) << "\n";
    return 0;
}

int run_char_table(int n, bool as_csv, bool as_json) {
    CharacterTable table = character_table(n);
    if (as_json) {
        json out;
        out["n"] = table.n;
        out["partitions"] = json::array();
        for (const Partition& p : table.partitions) out["partitions"].push_back(format_partition(p));
        out["cycle_types"] = json::array();
        for (const CycleType& c : table.cycle_types) out["cycle_types"].push_back(format_partition(c));
        out["values"] = table.values;
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (as_csv) {
        std::cout << "shape";
        for (const CycleType& c : table.cycle_types) std::cout << ",\"" << format_partition(c) << "\"";
        std::cout << "\n";
        for (std::size_t r = 0; r < table.partitions.size(); ++r) {
            std::cout << "\"" << format_partition(table.partitions[r]) << "\"";
            for (long long v : table.values[r]) std::cout << "," << v;
            std::cout << "\n";
        }
        return 0;
    }
    for (std::size_t r = 0; r < table.partitions.size(); ++r) {
        std::cout << format_partition(table.partitions[r]) << "\t";
        for (std::size_t c = 0; c < table.values[r].size(); ++c) {
            if (c > 0) std::cout << " ";
            std::cout << table.values[r][c];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_verify(int n, bool deep, bool as_json) {
    std::vector<CheckResult> results = run_verification(n, deep);
    bool all_pass = true;
    if (as_json) {
        json out = json::array();
        for (const CheckResult& r : results) {
            all_pass = all_pass && r.pass;
            json item;
            item["check_id"] = r.check_id;
            item["theorem_ref"] = r.theorem_ref;
            item["n"] = r.n;
            item["status"] = r.pass ? "pass" : "fail";
            item["detail"] = r.detail;
            out.push_back(item);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            all_pass = all_pass && r.pass;
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.check_id << " (n<=" << r.n
                      << "): " << r.theorem_ref << " -- " << r.detail << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_pass ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact representations of the symmetric groups: tableaux, Young's "
                 "seminormal/orthogonal forms, Jucys-Murphy spectra, Murnaghan-Nakayama "
                 "characters, and a brute-force group-algebra verification suite."};
    app.footer("Formats: partitions \"3,2,1\" (\"-\" for the empty one); skew shapes "
               "\"outer/inner\" like \"3,2/1\"; cycle types \"3,1,1\"; permutations "
               "\"(1 2 3)(4 5)\" or --oneline \"2,3,1\"; tableaux print as rows \"1,2;3\".\n"
               "SYMREP_SIZE_CAP overrides the enumeration box-count cap (default 20).");
    app.require_subcommand(1);

    int n = 0;
    std::string shape_text, type_text, perm_cycles, one_line, form_name = "seminormal";
    int generator = 0;
    bool as_json = false, as_csv = false, deep = false, bruteforce = false;

    CLI::App* partitions = app.add_subcommand("partitions", "All partitions of n, largest first");
    partitions->add_option("n", n, "number of boxes")->required();
    partitions->add_flag("--json", as_json, "machine-readable output");

    CLI::App* tableaux =
        app.add_subcommand("tableaux", "Standard tableaux of a shape with their content vectors");
    tableaux->add_option("shape", shape_text, "partition or outer/inner skew shape")->required();
    tableaux->add_flag("--json", as_json, "machine-readable output");

    CLI::App* dim = app.add_subcommand("dim", "Number of standard tableaux of a shape");
    dim->add_option("shape", shape_text, "partition or outer/inner skew shape")->required();

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Content vectors of all tableaux with n boxes, by shape");
    spectrum->add_option("n", n, "number of boxes")->required();
    spectrum->add_flag("--json", as_json, "machine-readable output");
    spectrum->add_flag("--bruteforce", bruteforce,
                       "cross-check against regular-module eigenvalue splitting");

    CLI::App* matrix = app.add_subcommand("matrix", "Representation matrix on the Young basis");
    matrix->add_option("shape", shape_text, "partition or outer/inner skew shape")->required();
    matrix->add_option("--gen", generator, "Coxeter generator index i for s_i");
    matrix->add_option("--perm", perm_cycles, "permutation in cycle notation, e.g. \"(1 2 3)\"");
    matrix->add_option("--oneline", one_line, "permutation in one-line notation, e.g. 2,3,1");
    matrix->add_option("--form", form_name, "seminormal (exact) or orthogonal")
        ->check(CLI::IsMember({"seminormal", "orthogonal"}));
    matrix->add_flag("--json", as_json, "machine-readable output");

    CLI::App* character = app.add_subcommand("character", "Character value on a cycle type");
    character->add_option("shape", shape_text, "partition or outer/inner skew shape")->required();
    character->add_option("cycle-type", type_text, "cycle type, e.g. 3,1,1")->required();

    CLI::App* char_table = app.add_subcommand("char-table", "Character table of S_n");
    char_table->add_option("n", n, "degree (1..8)")->required();
    char_table->add_flag("--csv", as_csv, "CSV output");
    char_table->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite up to size n");
    verify->add_option("n", n, "bound for every check (each also has its own cap)")->required();
    verify->add_flag("--deep", deep, "lift the per-check caps by one");
    verify->add_flag("--json", as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (partitions->parsed()) return run_partitions(n, as_json);
        if (tableaux->parsed()) return run_tableaux(shape_text, as_json);
        if (dim->parsed()) return run_dim(shape_text);
        if (spectrum->parsed()) return run_spectrum(n, as_json, bruteforce);
        if (matrix->parsed())
            return run_matrix(shape_text, generator, perm_cycles, one_line, form_name, as_json);
        if (character->parsed()) return run_character(shape_text, type_text);
        if (char_table->parsed()) return run_char_table(n, as_csv, as_json);
        if (verify->parsed()) return run_verify(n, deep, as_json);
    } catch (const SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return kExitSizeCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
