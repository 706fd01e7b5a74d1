#include "symrep/characters.hpp"
#include "symrep/content.hpp"
#include "symrep/oracle.hpp"
#include "symrep/representations.hpp"
#include "symrep/text.hpp"
#include "symrep/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

namespace py = pybind11;
using namespace symrep;

namespace {

FormKind parse_form(const std::string& form) {
    if (form == "seminormal") return FormKind::Seminormal;
    if (form == "orthogonal") return FormKind::Orthogonal;
    throw std::invalid_argument("form must be 'seminormal' or 'orthogonal'");
}

py::object matrix_to_python(const RepMatrix& m) {
    py::list rows;
    std::size_t dim = m.basis.size();
    for (std::size_t i = 0; i < dim; ++i) {
        py::list row;
        for (std::size_t j = 0; j < dim; ++j) {
            if (const auto* exact = std::get_if<Matrix<Rational>>(&m.entries)) {
                row.append(to_string((*exact)(i, j)));
            } else {
                row.append(std::get<Matrix<double>>(m.entries)(i, j));
            }
        }
        rows.append(row);
    }
    py::dict out;
    out["shape"] = format_shape(m.shape);
    out["form"] = m.form == FormKind::Seminormal ? "seminormal" : "orthogonal";
    py::list basis;
    for (const StandardTableau& t : m.basis) basis.append(format_tableau(t));
    out["basis"] = basis;
    out["rows"] = rows;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact representations of the symmetric groups: tableaux, content vectors, "
              "Young's seminormal and orthogonal forms, Murnaghan-Nakayama characters, and "
              "a brute-force group-algebra verification suite.";

    m.def(
        "partitions",
        [](int n) {
            std::vector<std::string> out;
            for (const Partition& p : enumerate_partitions(n)) out.push_back(format_partition(p));
            return out;
        },
        py::arg("n"), "All partitions of n in canonical order, as strings like '3,1'.");

    m.def(
        "dim", [](const std::string& shape) { return tableau_count(parse_shape(shape)); },
        py::arg("shape"), "Number of standard tableaux of a straight or skew shape.");

    m.def(
        "tableaux",
        [](const std::string& shape) {
            py::list out;
            for (const StandardTableau& t : enumerate_tableaux(parse_shape(shape))) {
                py::dict item;
                item["rows"] = format_tableau(t);
                item["content"] = t.content_sequence();
                out.append(item);
            }
            return out;
        },
        py::arg("shape"),
        "Standard tableaux in canonical order, each with its row form and content sequence.");

    m.def(
        "is_content_vector",
        [](std::vector<int> entries) {
            return std::holds_alternative<ContentVector>(validate_content(std::move(entries)));
        },
        py::arg("entries"));

    m.def(
        "validate_content",
        [](std::vector<int> entries) -> py::object {
            auto checked = validate_content(std::move(entries));
            if (std::holds_alternative<ContentVector>(checked)) return py::none();
            const auto& rejection = std::get<ContentRejection>(checked);
            py::dict out;
            out["condition"] = rejection.condition;
            out["index"] = rejection.index;
            out["message"] = rejection.message;
            return out;
        },
        py::arg("entries"),
        "None when the sequence is a content vector; otherwise the first violated "
        "condition (1..3), its 1-based index, and a message.");

    m.def(
        "tableau_from_content",
        [](std::vector<int> entries) {
            auto built = tableau_from_raw_content(std::move(entries));
            if (const auto* rejection = std::get_if<ContentRejection>(&built)) {
                throw std::invalid_argument(rejection->message);
            }
            const auto& t = std::get<StandardTableau>(built);
            return py::make_tuple(format_partition(t.shape().outer()), format_tableau(t));
        },
        py::arg("entries"), "The unique tableau with the given contents: (shape, rows).");

    m.def(
        "content_vector",
        [](const std::string& shape, const std::string& rows) {
            SkewShape parsed = parse_shape(shape);
            std::vector<std::vector<int>> row_labels;
            std::string current;
            for (char c : rows + ";") {
                if (c == ';') {
                    row_labels.push_back({});
                    std::string item;
                    for (char d : current + ",") {
                        if (d == ',') {
                            if (!item.empty()) row_labels.back().push_back(std::stoi(item));
                            item.clear();
                        } else {
                            item += d;
                        }
                    }
                    current.clear();
                } else {
                    current += c;
                }
            }
            return StandardTableau(parsed, row_labels).content_sequence();
        },
        py::arg("shape"), py::arg("rows"),
        "Content sequence of the tableau given as rows like '1,2;3'.");

    m.def(
        "coxeter_matrix",
        [](const std::string& shape, int i, const std::string& form) {
            return matrix_to_python(coxeter_matrix(parse_shape(shape), i, parse_form(form)));
        },
        py::arg("shape"), py::arg("i"), py::arg("form") = "seminormal");

    m.def(
        "yjm_matrix",
        [](const std::string& shape, int j, const std::string& form) {
            return matrix_to_python(yjm_matrix(parse_shape(shape), j, parse_form(form)));
        },
        py::arg("shape"), py::arg("j"), py::arg("form") = "seminormal");

    m.def(
        "permutation_matrix",
        [](const std::string& shape, const std::string& cycles, const std::string& form) {
            SkewShape parsed = parse_shape(shape);
            Permutation g = parse_cycles(cycles, parsed.box_count());
            return matrix_to_python(permutation_matrix(parsed, g, parse_form(form)));
        },
        py::arg("shape"), py::arg("cycles"), py::arg("form") = "seminormal");

    m.def(
        "character",
        [](const std::string& shape, const std::string& cycle_type) {
            return mn_character(parse_shape(shape), parse_partition(cycle_type));
        },
        py::arg("shape"), py::arg("cycle_type"),
        "Murnaghan-Nakayama character value, e.g. character('2,1', '3') == -1.");

    m.def(
        "character_table",
        [](int n) {
            CharacterTable table = character_table(n);
            py::dict out;
            out["n"] = table.n;
            std::vector<std::string> rows, cols;
            for (const Partition& p : table.partitions) rows.push_back(format_partition(p));
            for (const CycleType& c : table.cycle_types) cols.push_back(format_partition(c));
            out["partitions"] = rows;
            out["cycle_types"] = cols;
            out["values"] = table.values;
            return out;
        },
        py::arg("n"));

    m.def(
        "spectrum",
        [](int n) {
            py::dict out;
            for (const Partition& shape : enumerate_partitions(n)) {
                py::list contents;
                for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                    contents.append(t.content_sequence());
                }
                out[py::str(format_partition(shape))] = contents;
            }
            return out;
        },
        py::arg("n"), "Content vectors of all tableaux with n boxes, grouped by shape.");

    m.def(
        "spectrum_bruteforce",
        [](int n) {
            py::list out;
            for (const SpectrumPoint& point : spectrum_bruteforce(n)) {
                out.append(py::make_tuple(point.weight, point.multiplicity));
            }
            return out;
        },
        py::arg("n"),
        "Joint eigenvalue tuples of the Jucys-Murphy elements on the regular module, "
        "with multiplicities, by exact rational splitting.");

    m.def(
        "young_neighbors",
        [](const std::string& shape) {
            YoungNeighbors nb = young_graph_neighbors(parse_partition(shape));
            std::vector<std::string> parents, children;
            for (const Partition& p : nb.parents) parents.push_back(format_partition(p));
            for (const Partition& c : nb.children) children.push_back(format_partition(c));
            return py::make_tuple(parents, children);
        },
        py::arg("shape"));

    m.def(
        "skew_hook_height",
        [](const std::string& shape) -> py::object {
            auto height = skew_hook_height(parse_shape(shape));
            if (!height) return py::none();
            return py::int_(*height);
        },
        py::arg("shape"));

    m.def(
        "verify",
        [](int n, bool deep) {
            py::list out;
            for (const CheckResult& r : run_verification(n, deep)) {
                py::dict item;
                item["check_id"] = r.check_id;
                item["theorem_ref"] = r.theorem_ref;
                item["n"] = r.n;
                item["status"] = r.pass ? "pass" : "fail";
                item["detail"] = r.detail;
                out.append(item);
            }
            return out;
        },
        py::arg("n"), py::arg("deep") = false,
        "Run the verification suite; returns one report entry per check.");
}
