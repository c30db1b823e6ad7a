// Python module exposing the main operations: ring construction, ideal
// lattices and their classification, named ideal spaces with soberness /
// spectrality / quasi-compactness verdicts, the corpus verification harness
// and the symbolic Z certificates.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idealspaces/harness.hpp"

namespace py = pybind11;
using namespace idealspaces;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

py::dict soberness_dict(const SobernessVerdict& v) {
  py::dict d;
  d["sober"] = v.sober;
  d["method"] = v.method;
  if (v.witness_closed_set) d["witness_closed_set"] = *v.witness_closed_set;
  if (v.witness_ideal) d["witness_ideal"] = *v.witness_ideal;
  return d;
}

}  // namespace

PYBIND11_MODULE(idealspaces, m) {
  m.doc() =
      "ideal lattices of finite commutative rings and the coarse lower topology "
      "of their ideal spaces";

  py::register_exception<Error>(m, "IdealspacesError");

  std::vector<std::string> family_tags, check_tags;
  for (Family f : kAllFamilies) family_tags.emplace_back(family_tag(f));
  for (CheckId c : kAllChecks) check_tags.emplace_back(check_tag(c));
  m.attr("FAMILIES") = family_tags;
  m.attr("CHECKS") = check_tags;

  py::class_<RingAnalysis>(m, "Analysis",
                           "full pipeline for one ring: lattice, classification, spaces")
      .def(py::init([](const std::string& spec) { return RingAnalysis(parse_ring_spec(spec)); }),
           py::arg("spec"))
      .def_property_readonly("spec_text",
                             [](const RingAnalysis& a) { return a.ring().spec_text(); })
      .def_property_readonly("ring_size", [](const RingAnalysis& a) { return a.ring().size(); })
      .def_property_readonly("ideal_count",
                             [](const RingAnalysis& a) { return a.lattice().count(); })
      .def_property_readonly("krull_dimension",
                             [](const RingAnalysis& a) { return a.dimension(); })
      .def_property_readonly("is_local", &RingAnalysis::is_local)
      .def("ideal_members",
           [](const RingAnalysis& a, IdealId i) { return a.lattice().ideals.at(i).members(); })
      .def("ideal_name",
           [](const RingAnalysis& a, IdealId i) { return a.lattice().ideal_name(i); })
      .def("contains",
           [](const RingAnalysis& a, IdealId i, IdealId j) { return a.lattice().leq(j, i); },
           py::arg("outer"), py::arg("inner"))
      .def("ideal_sum",
           [](const RingAnalysis& a, IdealId i, IdealId j) { return a.lattice().sum(i, j); })
      .def("ideal_intersection",
           [](const RingAnalysis& a, IdealId i, IdealId j) { return a.lattice().meet(i, j); })
      .def("ideal_product",
           [](const RingAnalysis& a, IdealId i, IdealId j) {
             return ideal_product(a.lattice(), i, j);
           })
      .def("radical",
           [](const RingAnalysis& a, IdealId i) { return radical_of(a.lattice(), i); })
      .def("flags",
           [](const RingAnalysis& a, IdealId i) {
             py::dict d;
             for (const char* f :
                  {"prime", "maximal", "primary", "radical", "irreducible",
                   "strongly_irreducible", "completely_irreducible", "nilpotent", "nil",
                   "principal", "regular", "minimal", "minimal_prime", "proper",
                   "finitely_generated"})
               d[f] = static_cast<bool>(a.classification().flag(f, i));
             return d;
           })
      .def("family",
           [](RingAnalysis& a, const std::string& tag) {
             return a.space(family_from_tag(tag)).points;
           },
           "lattice ids of the family's members")
      .def("sober",
           [](RingAnalysis& a, const std::string& tag) {
             const IdealSpace& sp = a.space(family_from_tag(tag));
             py::dict d;
             d["direct"] = soberness_dict(is_sober_direct(sp));
             d["criterion"] = soberness_dict(is_sober_criterion(sp));
             return d;
           })
      .def("irreducible",
           [](RingAnalysis& a, const std::string& tag) {
             const IdealSpace& sp = a.space(family_from_tag(tag));
             if (sp.size() == 0) return py::dict(py::arg("irreducible") = false,
                                                 py::arg("empty") = true);
             IrreducibilityResult r = is_irreducible(sp, BitSet::full(sp.size()));
             py::dict d;
             d["irreducible"] = r.irreducible;
             if (r.witness_pair)
               d["witness_pair"] = py::make_tuple(sp.points[r.witness_pair->first],
                                                  sp.points[r.witness_pair->second]);
             return d;
           })
      .def("spectral",
           [](RingAnalysis& a, const std::string& tag) {
             SpectralityCertificate c = is_spectral_finite(a.space(family_from_tag(tag)));
             py::dict d;
             d["t0"] = c.t0;
             d["quasi_compact"] = c.quasi_compact;
             d["qc_open_basis"] = c.qc_open_basis;
             d["sober"] = c.soberness.sober;
             d["spectral"] = c.spectral;
             return d;
           })
      .def("quasi_compactness", [](RingAnalysis& a, const std::string& tag) {
        return json_to_py(
            quasi_compactness_to_json(quasi_compactness_report(a.space(family_from_tag(tag)))));
      });

  m.def(
      "analyze",
      [](const std::string& spec, py::object family) {
        std::optional<Family> only;
        if (!family.is_none()) only = family_from_tag(family.cast<std::string>());
        return json_to_py(analysis_to_json(analyze(parse_ring_spec(spec), only)));
      },
      py::arg("spec"), py::arg("family") = py::none(),
      "full analysis report for one ring, as nested dicts");

  m.def(
      "verify",
      [](py::object corpus, py::object checks, std::uint64_t seed, std::uint64_t z_bound) {
        CorpusSpec cs;
        if (!corpus.is_none())
          cs = CorpusSpec::from_json(
              nlohmann::json::parse(py::str(py::module_::import("json").attr("dumps")(corpus))
                                        .cast<std::string>()));
        std::vector<CheckId> ids;
        if (checks.is_none())
          ids.assign(kAllChecks.begin(), kAllChecks.end());
        else
          for (const auto& t : checks.cast<std::vector<std::string>>())
            ids.push_back(check_from_tag(t));
        HarnessOptions opt;
        opt.seed = seed;
        opt.z_bound = z_bound;
        auto reports = run_checks(ids, cs, opt);
        py::list out;
        for (const TheoremReport& r : reports) out.append(json_to_py(r.to_json()));
        return out;
      },
      py::arg("corpus") = py::none(), py::arg("checks") = py::none(), py::arg("seed") = 1,
      py::arg("z_bound") = 2000, "run corpus checks; returns one report dict per check");

  m.def("default_corpus", [] { return json_to_py(CorpusSpec{}.to_json()); });

  m.def("reg_z_witness", &reg_z_irreducibility_witness, py::arg("n"), py::arg("m"),
        "least prime dividing neither n nor m");
  m.def(
      "z_classify",
      [](std::uint64_t n) {
        ZClassification c = z_classify(ZIdeal{n});
        py::dict d;
        d["prime"] = c.prime;
        d["maximal"] = c.maximal;
        d["primary"] = c.primary;
        d["regular_proper"] = c.regular_proper;
        d["radical"] = c.radical;
        return d;
      },
      py::arg("n"));
  m.def(
      "reg_z_certificate",
      [](std::uint64_t bound) { return json_to_py(reg_z_certificate_to_json(
            reg_z_not_sober_certificate(bound))); },
      py::arg("bound") = 1000);
  m.def(
      "prm_z_verdict",
      [](std::uint64_t bound) { return json_to_py(prm_z_verdict_to_json(
            prm_z_sober_bounded(bound))); },
      py::arg("bound") = 1000);
}
