#include "synla/report_json.hpp"

#include <sstream>

namespace synla {

using nlohmann::json;

json matrix_to_json(const SymMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json named_matrix_to_json(const NamedMatrix& m) {
  return {{"name", m.name}, {"rows", matrix_to_json(m.matrix)}};
}

namespace {

json membership_to_json(const MembershipCheck& c) {
  json j{{"passed", c.passed}, {"worst_residual", c.worst_residual}};
  if (c.witness) j["witness"] = matrix_to_json(*c.witness);
  return j;
}

json witness_to_json(const CertWitness& w) {
  json mats = json::array();
  for (const auto& m : w.matrices) mats.push_back(named_matrix_to_json(m));
  return {{"condition", w.condition},
          {"violation", w.violation},
          {"detail", w.detail},
          {"matrices", std::move(mats)}};
}

}  // namespace

json closure_to_json(const ClosureReport& r) {
  return {{"contains_unit", r.contains_unit},
          {"unit_residual", r.unit_residual},
          {"abs_closed", membership_to_json(r.abs_closed)},
          {"carrier_closed", membership_to_json(r.carrier_closed)},
          {"pos_closed", membership_to_json(r.pos_closed)},
          {"neg_closed", membership_to_json(r.neg_closed)},
          {"ginf_closed", membership_to_json(r.ginf_closed)},
          {"gsup_closed", membership_to_json(r.gsup_closed)},
          {"derived_consistent", r.derived_consistent},
          {"conclusive", r.conclusive},
          {"samples_used", r.samples_used},
          {"seed", r.seed}};
}

json cert_report_to_json(const CertReport& r) {
  json conditions = json::object();
  for (const auto& [label, result] : r.conditions) {
    json c{{"holds", result.holds}, {"samples", result.samples}};
    if (result.witness) c["witness"] = witness_to_json(*result.witness);
    conditions[label] = std::move(c);
  }
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w));

  json commutative{{"commutative", r.commutative.commutative}};
  if (!r.commutative.commutative) {
    commutative["witness_pair"] = {r.commutative.witness_i,
                                   r.commutative.witness_j};
    commutative["commutator_norm"] = r.commutative.commutator_norm;
  }

  return {{"verdict", to_string(r.verdict)},
          {"closure", closure_to_json(r.closure)},
          {"commutative", std::move(commutative)},
          {"conditions", std::move(conditions)},
          {"witnesses", std::move(witnesses)},
          {"config", {{"seed", r.seed}, {"budget", r.budget}}}};
}

json classification_to_json(const ClassificationVerdict& v,
                            const std::vector<std::string>& names) {
  json witnesses = json::array();
  for (const auto& w : v.witnesses) {
    json entry{{"violated", w.violated}};
    auto name_of = [&](int idx) -> json {
      if (idx < 0 || idx >= static_cast<int>(names.size())) return nullptr;
      return names[static_cast<std::size_t>(idx)];
    };
    entry["pair"] = {name_of(w.i), name_of(w.j)};
    witnesses.push_back(std::move(entry));
  }
  return {{"structure", to_string(v.structure)},
          {"is_mv_effect_algebra", is_mv_effect_algebra(v.structure)},
          {"meets_in_set", v.meets_in_set},
          {"witnesses", std::move(witnesses)}};
}

json disjoint_to_json(const DisjointVerdict& v) {
  return {{"ginf_zero", v.ginf_zero},
          {"sum_is_absdiff", v.sum_is_absdiff},
          {"psd_jordan_zero", v.psd_jordan_zero},
          {"psd_product_zero", v.psd_product_zero},
          {"disjoint", v.disjoint()},
          {"consistent", v.consistent()}};
}

json maximality_to_json(const MaximalityReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        {{"step", v.step}, {"direction", matrix_to_json(v.direction)}});
  }
  return {{"trials", r.trials},
          {"seed", r.seed},
          {"ok", r.ok()},
          {"violations", std::move(violations)}};
}

namespace {

bool is_matrix_rows(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) return false;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) return false;
    for (const auto& cell : row) {
      if (!cell.is_number()) return false;
    }
  }
  return true;
}

void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty())) {
        out << pad << key << ":\n";
        render(value, out, indent + 1);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (is_matrix_rows(j)) {
    for (const auto& row : j) {
      out << pad << "[";
      for (std::size_t k = 0; k < row.size(); ++k) {
        out << (k ? ", " : " ") << row[k].get<double>();
      }
      out << " ]\n";
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        out << pad << "-\n";
        render(item, out, indent + 1);
      } else {
        out << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream out;
  render(doc, out, 0);
  return out.str();
}

}  // namespace synla
