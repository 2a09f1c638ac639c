// Python bindings for the core operations: dataset indexing, the twelve
// algorithms, metric computation, scenario generation, and the LTM/MLE
// reformatters.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "truthdisc/algorithms/registry.hpp"
#include "truthdisc/dataset.hpp"
#include "truthdisc/errors.hpp"
#include "truthdisc/generator.hpp"
#include "truthdisc/io.hpp"
#include "truthdisc/metrics.hpp"
#include "truthdisc/reformat.hpp"
#include "truthdisc/selection.hpp"

namespace py = pybind11;
using namespace truthdisc;

namespace {

std::vector<Claim> claims_from_tuples(
    const std::vector<std::tuple<std::string, std::string, std::string, std::string>>& rows) {
    std::vector<Claim> claims;
    claims.reserve(rows.size());
    for (const auto& [cid, sid, did, value] : rows) {
        claims.push_back(Claim{cid, sid, did, canonical_value(value)});
    }
    return claims;
}

std::vector<std::tuple<std::string, std::string, std::string, std::string>> claims_to_tuples(
    const std::vector<Claim>& claims) {
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> rows;
    rows.reserve(claims.size());
    for (const auto& c : claims) rows.emplace_back(c.claim_id, c.source_id, c.data_item_id, c.value);
    return rows;
}

ParamOverrides overrides_from_dict(const py::dict& params) {
    ParamOverrides out;
    for (auto item : params) {
        std::string key = py::cast<std::string>(item.first);
        if (py::isinstance<py::bool_>(item.second)) {
            out[key] = py::cast<bool>(item.second) ? "true" : "false";
        } else {
            out[key] = py::cast<std::string>(py::str(item.second));
        }
    }
    return out;
}

py::dict metrics_to_dict(const MetricsReport& m) {
    py::dict d;
    d["tp"] = m.tp;
    d["fp"] = m.fp;
    d["fn"] = m.fn;
    d["tn"] = m.tn;
    auto opt = [](const std::optional<double>& v) -> py::object {
        return v ? py::cast(*v) : py::none();
    };
    d["precision"] = opt(m.precision);
    d["accuracy"] = opt(m.accuracy);
    d["recall"] = opt(m.recall);
    d["specificity"] = opt(m.specificity);
    return d;
}

GroundTruth truth_from_dict(const std::map<std::string, std::vector<std::string>>& truth) {
    GroundTruth gt;
    for (const auto& [item, values] : truth) {
        for (const auto& v : values) gt[item].insert(canonical_value(v));
    }
    return gt;
}

Selection selection_from_dict(const IndexedDataset& ds,
                              const std::map<std::string, std::vector<std::string>>& sel) {
    Selection out(ds.item_count());
    for (const auto& [item, values] : sel) {
        int d = ds.find_item(item);
        if (d < 0) continue;
        for (const auto& v : values) {
            int idx = ds.find_value(d, canonical_value(v));
            if (idx >= 0) out[d].push_back(idx);
        }
        std::sort(out[d].begin(), out[d].end());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Truth discovery over conflicting multi-source claims";

    py::register_exception<Error>(m, "TruthDiscError");

    py::class_<IndexedDataset>(m, "Dataset")
        .def_property_readonly("n_sources", &IndexedDataset::source_count)
        .def_property_readonly("n_items", &IndexedDataset::item_count)
        .def_property_readonly("n_values", &IndexedDataset::value_slot_count)
        .def("sources",
             [](const IndexedDataset& ds) {
                 std::vector<std::string> out;
                 for (const auto& s : ds.sources()) out.push_back(s.id);
                 return out;
             })
        .def("items",
             [](const IndexedDataset& ds) {
                 std::vector<std::string> out;
                 for (const auto& d : ds.items()) out.push_back(d.id);
                 return out;
             })
        .def("values",
             [](const IndexedDataset& ds, const std::string& item) {
                 std::vector<std::string> out;
                 int d = ds.find_item(item);
                 if (d >= 0) {
                     for (const auto& v : ds.items()[d].values) out.push_back(v.value);
                 }
                 return out;
             },
             py::arg("item"))
        .def("__repr__", [](const IndexedDataset& ds) {
            std::ostringstream os;
            os << "Dataset(" << ds.source_count() << " sources, " << ds.item_count()
               << " items, " << ds.claims().size() << " claims)";
            return os.str();
        });

    m.def("index_dataset",
          [](const std::vector<std::tuple<std::string, std::string, std::string, std::string>>&
                 rows) { return IndexedDataset::build(claims_from_tuples(rows)); },
          py::arg("claims"),
          "Index a list of (claim_id, source_id, data_item_id, value) tuples.");

    m.def("algorithms", []() {
        std::vector<std::string> names;
        for (Algorithm a : all_algorithms()) names.push_back(to_string(a));
        return names;
    });

    m.def("run",
          [](const std::string& algorithm, const IndexedDataset& ds, const py::dict& params,
             std::uint64_t seed) {
              AlgorithmSpec spec;
              spec.algorithm = algorithm_from_string(algorithm);
              spec.overrides = overrides_from_dict(params);
              RunResult r = run_algorithm(spec, ds, seed);
              py::dict out;
              out["trust"] = r.trust_by_id(ds);
              out["confidence"] = r.confidence_by_id(ds);
              out["selection"] = r.selection_by_id(ds);
              out["iterations"] = r.iterations;
              out["converged"] = r.converged;
              return out;
          },
          py::arg("algorithm"), py::arg("dataset"), py::arg("params") = py::dict(),
          py::arg("seed") = 0,
          "Run one algorithm; returns trust, confidence, selection, iterations.");

    m.def("compute_metrics",
          [](const std::map<std::string, std::vector<std::string>>& selection,
             const std::map<std::string, std::vector<std::string>>& truth,
             const IndexedDataset& ds, bool full_scope) {
              return metrics_to_dict(compute_metrics(
                  selection_from_dict(ds, selection), truth_from_dict(truth), ds,
                  full_scope ? MetricsScope::AllItems : MetricsScope::GoldItems));
          },
          py::arg("selection"), py::arg("ground_truth"), py::arg("dataset"),
          py::arg("full_scope") = false);

    m.def("generate_scenario",
          [](int sources, int items, const std::string& cov, const std::string& conf,
             const std::string& gt, int max_distinct, std::uint64_t seed) {
              ScenarioConfig cfg;
              cfg.n_sources = sources;
              cfg.n_items = items;
              cfg.cov = coverage_from_string(cov);
              cfg.conf = conflict_from_string(conf);
              cfg.gt = truth_from_string(gt);
              cfg.max_distinct = max_distinct;
              cfg.seed = seed;
              GeneratedScenario s = generate_scenario(cfg);
              py::dict meta;
              meta["coverage"] = s.metadata.coverage;
              meta["achieved_true"] = s.metadata.achieved_true;
              meta["achieved_distinct"] = s.metadata.achieved_distinct;
              meta["items_with_shortfall"] = s.metadata.items_with_shortfall;
              meta["quota_slips"] = s.metadata.quota_slips;
              meta["mean_true_rate"] = s.metadata.mean_true_rate;
              std::map<std::string, std::vector<std::string>> truth;
              for (const auto& [item, values] : s.ground_truth) {
                  truth[item].assign(values.begin(), values.end());
              }
              return py::make_tuple(claims_to_tuples(s.claims), truth, meta);
          },
          py::arg("sources") = 50, py::arg("items") = 1000, py::arg("cov") = "U25",
          py::arg("conf") = "U", py::arg("gt") = "R", py::arg("max_distinct") = 2,
          py::arg("seed") = 0,
          "Generate a synthetic scenario; returns (claims, ground_truth, metadata).");

    m.def("reformat_for_ltm",
          [](const std::vector<std::tuple<std::string, std::string, std::string, std::string>>&
                 rows) { return claims_to_tuples(reformat_for_ltm(claims_from_tuples(rows)).claims); },
          py::arg("claims"));

    m.def("reformat_for_mle",
          [](const std::vector<std::tuple<std::string, std::string, std::string, std::string>>&
                 rows) { return claims_to_tuples(reformat_for_mle(claims_from_tuples(rows)).claims); },
          py::arg("claims"));

    m.def("load_claims",
          [](const std::string& path) { return claims_to_tuples(load_claims(path)); },
          py::arg("path"));

    m.def("save_claims",
          [](const std::vector<std::tuple<std::string, std::string, std::string, std::string>>&
                 rows,
             const std::string& path) { save_claims(claims_from_tuples(rows), path); },
          py::arg("claims"), py::arg("path"));

    m.def("load_ground_truth",
          [](const std::string& path) {
              std::map<std::string, std::vector<std::string>> out;
              for (const auto& [item, values] : load_ground_truth(path)) {
                  out[item].assign(values.begin(), values.end());
              }
              return out;
          },
          py::arg("path"));
}
