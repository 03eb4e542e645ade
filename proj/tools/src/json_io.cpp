#include "th_cli/json_io.hpp"

#include <algorithm>

namespace th::jsonio {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw error("bad_json", what);
}

Int int_from_json(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<Int>();
}

std::vector<Int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of integers");
  std::vector<Int> out;
  for (const auto& v : j) out.push_back(int_from_json(v, what + " entry"));
  return out;
}

}  // namespace

json complex_to_json(const std::complex<double>& z) {
  return json{{"im", z.imag()}, {"re", z.real()}};
}

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object() && j.contains("re") && j.contains("im") &&
      j["re"].is_number() && j["im"].is_number()) {
    return {j["re"].get<double>(), j["im"].get<double>()};
  }
  bad("complex values are numbers or {\"re\":…,\"im\":…}");
}

json to_json(const GroupSpec& spec) {
  return json{{"invariant_factors", spec.invariant_factors()}};
}

GroupSpec group_from_json(const json& j, Int max_order) {
  if (!j.is_object() || !j.contains("invariant_factors")) {
    bad("group must be {\"invariant_factors\":[…]}");
  }
  return GroupSpec(int_list(j["invariant_factors"], "invariant_factors"),
                   max_order);
}

json to_json(const GroupElement& x) { return json(x.coords); }

GroupElement element_from_json(const json& j, const GroupSpec& spec) {
  GroupElement x{int_list(j, "group element")};
  spec.require_valid(x);
  return x;
}

json to_json(const Rotation& r) {
  return json{{"den", r.den()}, {"num", r.num()}};
}

Rotation rotation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    bad("rotation must be {\"num\":…,\"den\":…}");
  }
  return Rotation::of(int_from_json(j["num"], "num"),
                      int_from_json(j["den"], "den"));
}

json to_json(const Subgroup& h) {
  json basis = json::array();
  for (Eigen::Index i = 0; i < h.basis().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < h.basis().cols(); ++j) {
      row.push_back(h.basis()(i, j));
    }
    basis.push_back(std::move(row));
  }
  json gens = json::array();
  for (const GroupElement& g : h.generators()) gens.push_back(to_json(g));
  return json{{"basis", std::move(basis)},
              {"generators", std::move(gens)},
              {"order", h.order()}};
}

Subgroup subgroup_from_json(const json& j, const GroupSpec& spec) {
  const json* rows = nullptr;
  if (j.is_object() && j.contains("generators")) {
    rows = &j["generators"];
  } else if (j.is_object() && j.contains("basis")) {
    rows = &j["basis"];
  } else {
    bad("subgroup must be {\"generators\":[[…],…]}");
  }
  if (!rows->is_array()) bad("subgroup generators must be an array");
  std::vector<GroupElement> gens;
  for (const auto& row : *rows) {
    gens.push_back(GroupElement{spec.reduce(int_list(row, "generator"))});
  }
  return Subgroup::from_generators(spec, gens);
}

json to_json(const PointSet& s) {
  json pts = json::array();
  for (const GroupElement& p : s.points()) pts.push_back(to_json(p));
  return json{{"points", std::move(pts)}};
}

PointSet pointset_from_json(const json& j, const GroupSpec& spec) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    bad("point set must be {\"points\":[[…],…]}");
  }
  std::vector<GroupElement> pts;
  for (const auto& p : j["points"]) {
    pts.push_back(element_from_json(p, spec));
  }
  return PointSet::of(spec, std::move(pts));
}

json to_json(const DiscreteMeasure& m) {
  json atoms = json::array();
  const bool nonneg = m.kind() == WeightKind::nonnegative;
  for (const Atom& a : m.atoms()) {
    json w = nonneg ? json(a.weight.real()) : complex_to_json(a.weight);
    atoms.push_back(json{{"point", to_json(a.point)}, {"weight", std::move(w)}});
  }
  return json{{"atoms", std::move(atoms)},
              {"kind", nonneg ? "nonnegative" : "complex"}};
}

DiscreteMeasure measure_from_json(const json& j, const GroupSpec& spec) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    bad("measure must be {\"atoms\":[…],\"kind\":…}");
  }
  std::string kind = "nonnegative";
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) bad("measure kind must be a string");
    kind = j["kind"].get<std::string>();
  }
  if (kind == "nonnegative") {
    std::vector<std::pair<GroupElement, double>> atoms;
    for (const auto& a : j["atoms"]) {
      if (!a.is_object() || !a.contains("point") || !a.contains("weight")) {
        bad("atoms are {\"point\":…,\"weight\":…}");
      }
      if (!a["weight"].is_number()) {
        bad("nonnegative measures take numeric weights");
      }
      atoms.emplace_back(element_from_json(a["point"], spec),
                         a["weight"].get<double>());
    }
    return DiscreteMeasure::nonnegative(spec, atoms);
  }
  if (kind == "complex") {
    std::vector<std::pair<GroupElement, std::complex<double>>> atoms;
    for (const auto& a : j["atoms"]) {
      if (!a.is_object() || !a.contains("point") || !a.contains("weight")) {
        bad("atoms are {\"point\":…,\"weight\":…}");
      }
      atoms.emplace_back(element_from_json(a["point"], spec),
                         complex_from_json(a["weight"]));
    }
    return DiscreteMeasure::complex_valued(spec, atoms);
  }
  bad("measure kind must be \"nonnegative\" or \"complex\"");
}

json to_json(const CrossSection& cs) {
  json out = json::array();
  for (const auto& [rep, image] : cs.table) {
    out.push_back(json{{"coset_rep", to_json(rep)}, {"image", to_json(image)}});
  }
  return out;
}

json to_json(const DensityVerdict& v) {
  json witness;
  if (v.violating_rep.has_value()) {
    witness = json{{"violating_rep", to_json(*v.violating_rep)}};
  } else {
    witness = to_json(v.witness);
  }
  return json{{"dense", v.dense},
              {"method", v.method == DensityMethod::rank ? "rank" : "coset"},
              {"rank", v.rank},
              {"support_size", v.support_size},
              {"witness", std::move(witness)}};
}

json to_json(const ExtractResult& r) {
  if (r.success) {
    return json{{"concentration_set", to_json(r.concentration_set)},
                {"success", true}};
  }
  json overlaps = json::array();
  for (const OverlapReport& o : r.overlaps) {
    overlaps.push_back(json{{"kappa", to_json(o.kappa)},
                            {"lambda", to_json(o.lambda)},
                            {"points", to_json(o.points)["points"]}});
  }
  return json{{"overlaps", std::move(overlaps)}, {"success", false}};
}

json to_json(const Signal& x) {
  json values = json::array();
  for (const auto& v : x.values) values.push_back(complex_to_json(v));
  return json{{"group", to_json(x.group)}, {"values", std::move(values)}};
}

Signal signal_from_json(const json& j, Int max_order) {
  if (!j.is_object() || !j.contains("group") || !j.contains("values") ||
      !j["values"].is_array()) {
    bad("signal must be {\"group\":…,\"values\":[…]}");
  }
  const GroupSpec spec = group_from_json(j["group"], max_order);
  std::vector<std::complex<double>> values;
  for (const auto& v : j["values"]) values.push_back(complex_from_json(v));
  return make_signal(spec, std::move(values));
}

json samples_to_json(const std::vector<std::complex<double>>& samples,
                     const Subgroup& h) {
  const auto elems = h.elements();
  if (elems.size() != samples.size()) {
    throw error("sample_count_mismatch",
                "sample table does not match the subgroup order");
  }
  json out = json::array();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out.push_back(json{{"element", to_json(elems[i])},
                       {"value", complex_to_json(samples[i])}});
  }
  return out;
}

std::vector<std::complex<double>> samples_from_json(const json& j,
                                                    const Subgroup& h) {
  if (!j.is_array()) bad("sample table must be an array");
  const auto elems = h.elements();
  if (j.size() != elems.size()) {
    throw error("sample_count_mismatch",
                "expected " + std::to_string(elems.size()) + " samples, got " +
                    std::to_string(j.size()));
  }
  std::vector<std::complex<double>> out(elems.size());
  // keyed entries may come in any order; plain arrays are positional
  bool keyed = !j.empty() && j.front().is_object() && j.front().contains("element");
  if (!keyed) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      out[i] = complex_from_json(j[i]);
    }
    return out;
  }
  std::vector<bool> seen(elems.size(), false);
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("element") ||
        !entry.contains("value")) {
      bad("keyed samples are {\"element\":…,\"value\":…}");
    }
    const GroupElement e = element_from_json(entry["element"], h.parent());
    const auto it = std::lower_bound(elems.begin(), elems.end(), e);
    if (it == elems.end() || !(*it == e)) {
      throw error("invalid_element", "sample element is not in the subgroup");
    }
    const auto idx = static_cast<std::size_t>(it - elems.begin());
    if (seen[idx]) bad("duplicate sample element");
    seen[idx] = true;
    out[idx] = complex_from_json(entry["value"]);
  }
  return out;
}

}  // namespace th::jsonio
