// Python module exposing the scheme toolkit's main operations.  Structured
// results cross the boundary as plain dicts/lists mirroring the CLI's JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "schemefusion/constructions.hpp"
#include "schemefusion/errors.hpp"
#include "schemefusion/fusion.hpp"
#include "schemefusion/json_io.hpp"
#include "schemefusion/scheme.hpp"
#include "schemefusion/spectra.hpp"
#include "schemefusion/srg.hpp"

namespace py = pybind11;
namespace sf = schemefusion;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

sf::ClassPartition partition_from_py(const std::vector<std::vector<int>>& blocks, int rank) {
    return sf::ClassPartition::from_blocks(blocks, rank);
}

py::list fusion_results_to_py(const std::vector<sf::FusionResult>& results) {
    py::list out;
    for (const auto& res : results) {
        py::dict entry;
        entry["rank"] = res.rank;
        entry["blocks"] = json_to_py(sf::partition_json(res.partition));
        out.append(entry);
    }
    return out;
}

std::vector<sf::BitMatrix> matrices_from_py(
    const std::vector<std::vector<std::vector<int>>>& raw) {
    std::vector<sf::BitMatrix> out;
    for (const auto& mat : raw) {
        int n = static_cast<int>(mat.size());
        sf::BitMatrix m(n);
        for (int u = 0; u < n; ++u) {
            if (static_cast<int>(mat[u].size()) != n)
                throw sf::Error(sf::errc::MalformedInput, "matrix rows must have length n");
            for (int v = 0; v < n; ++v)
                if (mat[u][v]) m.set(u, v);
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(schemefusion, m) {
    m.doc() = "Exact toolkit for commutative association schemes";

    static py::exception<sf::Error> exc(m, "SchemeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const sf::Error& e) {
            py::set_error(exc, (e.code() + ": " + e.what()).c_str());
        }
    });

    py::class_<sf::Scheme>(m, "Scheme")
        .def_property_readonly("order", &sf::Scheme::order)
        .def_property_readonly("rank", &sf::Scheme::rank)
        .def_property_readonly("valencies", [](const sf::Scheme& s) { return s.valencies(); })
        .def_property_readonly("symmetric", &sf::Scheme::symmetric)
        .def("class_of", &sf::Scheme::class_of, py::arg("u"), py::arg("v"))
        .def("p", &sf::Scheme::p, py::arg("i"), py::arg("j"), py::arg("l"),
             "Intersection number p_ij^l")
        .def("relation_matrix",
             [](const sf::Scheme& s) {
                 std::vector<std::vector<int>> out(
                     static_cast<size_t>(s.order()), std::vector<int>(s.order()));
                 for (int u = 0; u < s.order(); ++u)
                     for (int v = 0; v < s.order(); ++v) out[u][v] = s.class_of(u, v);
                 return out;
             },
             "n x n matrix of class indices")
        .def("text", [](const sf::Scheme& s) { return sf::scheme_to_text(s); })
        .def("__repr__", [](const sf::Scheme& s) {
            return "<Scheme order=" + std::to_string(s.order()) +
                   " rank=" + std::to_string(s.rank()) + ">";
        });

    m.def("catalog",
          [](const std::string& name, const std::vector<long long>& params) {
              return sf::construct_catalog(name, params);
          },
          py::arg("name"), py::arg("params") = std::vector<long long>{});
    m.def("catalog_list", [] {
        py::list out;
        for (const auto& e : sf::catalog_list()) {
            py::dict d;
            d["name"] = e.name;
            d["params"] = e.params;
            d["summary"] = e.summary;
            out.append(d);
        }
        return out;
    });
    m.def("from_text", &sf::scheme_from_text, py::arg("text"),
          "Parse and verify a scheme in the plain-text format");
    m.def("from_graph6",
          [](const std::string& text) {
              auto split = sf::graph_scheme_classes(sf::parse_graph6(text));
              sf::SchemeReport rep = sf::verify_scheme(split.classes, true);
              if (!rep.pass)
                  throw sf::Error(sf::errc::AxiomViolation,
                                  "graph is not strongly regular (classes fail the axioms)");
              return *rep.scheme;
          },
          py::arg("text"), "Scheme {I, A, complement} of a strongly regular graph6 string");
    m.def("verify",
          [](const std::vector<std::vector<std::vector<int>>>& matrices) {
              return json_to_py(
                  sf::scheme_report_json(sf::verify_scheme(matrices_from_py(matrices))));
          },
          py::arg("matrices"), "Run the five axiom checks on 0/1 matrices");

    m.def("hamming", &sf::hamming, py::arg("n"), py::arg("q"));
    m.def("generalized_hamming",
          [](const sf::Scheme& base, int n) {
              sf::GeneralizedHamming h = sf::generalized_hamming(base, n);
              return py::make_tuple(h.scheme, h.compositions);
          },
          py::arg("base"), py::arg("n"), "Returns (scheme, compositions)");
    m.def("tensor", &sf::tensor_product, py::arg("a"), py::arg("b"));
    m.def("wreath", &sf::wreath_product, py::arg("a"), py::arg("b"));

    m.def("character_table",
          [](const sf::Scheme& s) {
              return json_to_py(sf::character_table_json(sf::character_table(s)));
          },
          py::arg("scheme"));

    m.def("enumerate_fusions",
          [](const sf::Scheme& s, const std::string& method, int threads) {
              return fusion_results_to_py(
                  sf::enumerate_fusions(s, sf::parse_fusion_method(method), threads));
          },
          py::arg("scheme"), py::arg("method") = "both", py::arg("threads") = 0);
    m.def("isolating_fusions",
          [](const sf::Scheme& s, const std::vector<int>& isolate, const std::string& method,
             int threads) {
              return fusion_results_to_py(
                  sf::isolating_fusions(s, isolate, sf::parse_fusion_method(method), threads));
          },
          py::arg("scheme"), py::arg("isolate"), py::arg("method") = "both",
          py::arg("threads") = 0);
    m.def("fused_scheme",
          [](const sf::Scheme& s, const std::vector<std::vector<int>>& blocks) {
              return sf::fused_scheme(s, partition_from_py(blocks, s.rank()));
          },
          py::arg("scheme"), py::arg("blocks"));
    m.def("fusion_lift",
          [](const std::vector<std::vector<int>>& blocks, int base_rank, int n) {
              return json_to_py(sf::partition_json(
                  sf::fusion_lift(partition_from_py(blocks, base_rank), base_rank, n)));
          },
          py::arg("blocks"), py::arg("base_rank"), py::arg("n"));

    m.def("classify",
          [](long long n, long long k, long long lam, long long mu) {
              sf::SrgParams params{n, k, lam, mu};
              sf::Spectrum sp = sf::spectrum_from_params(params);
              json families = json::array();
              json predicted = json::array();
              for (const auto& tag : sf::classify_families(sp)) {
                  if (tag.tag != "homogeneous") families.push_back(sf::family_tag_json(tag));
                  for (const auto& label : tag.fusions)
                      if (std::find(predicted.begin(), predicted.end(), json(label)) ==
                          predicted.end())
                          predicted.push_back(label);
              }
              json out{{"spectrum", sf::spectrum_json(sp)},
                       {"feasibility", sf::feasibility_json(sf::feasibility_check(params))},
                       {"families", std::move(families)},
                       {"predictedFusions", std::move(predicted)}};
              return json_to_py(out);
          },
          py::arg("n"), py::arg("k"), py::arg("lam"), py::arg("mu"));
    m.def("feasibility",
          [](long long n, long long k, long long lam, long long mu) {
              return json_to_py(sf::feasibility_json(sf::feasibility_check({n, k, lam, mu})));
          },
          py::arg("n"), py::arg("k"), py::arg("lam"), py::arg("mu"));

    m.def("universal_tensor_fusions",
          [](bool symmetric) {
              py::list out;
              for (const auto& p : sf::universal_tensor_fusions(symmetric))
                  out.append(json_to_py(sf::partition_json(p)));
              return out;
          },
          py::arg("symmetric") = true);
    m.def("switch_partner",
          [](const std::vector<std::vector<int>>& blocks) {
              int domain = 0;
              for (const auto& b : blocks) domain += static_cast<int>(b.size());
              return json_to_py(
                  sf::partition_json(sf::switch_partner(partition_from_py(blocks, domain))));
          },
          py::arg("blocks"));
    m.def("fusion_labels", [] {
        py::dict out;
        for (const auto& e : sf::fusion_label_table())
            out[py::str(e.label)] = json_to_py(sf::partition_json(e.partition));
        return out;
    });
}
