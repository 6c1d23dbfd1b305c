#include "exlie/registry_io.hpp"

#include <openssl/evp.h>

#include <cstdio>

#include "exlie/error.hpp"
#include "exlie/relations.hpp"
#include "exlie/symmetry_dims.hpp"
#include "exlie/tables.hpp"

namespace exlie {

using nlohmann::json;

json form_to_json(const RealForm& f) {
  json arrows = json::array();
  for (auto [a, b] : f.satake.arrows) arrows.push_back({a, b});
  return json{{"label", f.label},
              {"roman", f.roman},
              {"complex_type", f.satake.complex_type},
              {"black", f.satake.black},
              {"arrows", arrows},
              {"dim_g", f.dim_g},
              {"dim_K", f.dim_K},
              {"dim_P", f.dim_P},
              {"dim_Npm", f.dim_Npm},
              {"m0_label", f.m0_label},
              {"has_discrete_series", f.has_discrete_series},
              {"parabolic_nodes", f.parabolic_nodes},
              {"pin_note", f.pin_note}};
}

RealForm form_from_json(const json& j) {
  try {
    RealForm f;
    f.label = j.at("label").get<std::string>();
    f.roman = j.value("roman", "");
    f.satake.complex_type = j.at("complex_type").get<std::string>();
    f.satake.black = j.at("black").get<std::vector<int>>();
    for (const auto& a : j.at("arrows")) {
      auto p = a.get<std::vector<int>>();
      if (p.size() != 2) throw Error(ErrorKind::kUsage, "arrow must have two nodes");
      f.satake.arrows.emplace_back(p[0], p[1]);
    }
    f.dim_g = j.at("dim_g").get<int>();
    f.dim_K = j.at("dim_K").get<int>();
    f.dim_P = j.at("dim_P").get<int>();
    f.dim_Npm = j.at("dim_Npm").get<int>();
    f.m0_label = j.at("m0_label").get<std::string>();
    f.has_discrete_series = j.value("has_discrete_series", false);
    f.parabolic_nodes = j.at("parabolic_nodes").get<std::vector<std::vector<int>>>();
    f.pin_note = j.value("pin_note", "");
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kUsage, std::string("malformed registry entry: ") + e.what());
  }
}

json forms_to_json(const std::vector<RealForm>& forms) {
  json out = json::array();
  for (const auto& f : forms) out.push_back(form_to_json(f));
  return out;
}

std::vector<RealForm> forms_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("forms") ? j.at("forms") : j;
  if (!arr.is_array()) throw Error(ErrorKind::kUsage, "registry must be an array of forms");
  std::vector<RealForm> out;
  for (const auto& e : arr) out.push_back(form_from_json(e));
  return out;
}

namespace {

json role_json(const RoleSpec& s) {
  return json{{"role", to_string(s.kind)}, {"algebra", s.algebra}, {"extra", s.extra},
              {"text", s.text()}};
}

}  // namespace

json registry_document(const std::vector<RealForm>& forms) {
  json doc;
  doc["forms"] = forms_to_json(forms);

  json maxp = json::array();
  for (const auto& r : max_parabolic_table()) {
    json row{{"form", r.form}, {"j", r.j}, {"levi", r.levi},
             {"abelian_rank", r.abelian_rank}, {"dim_n", r.dim_n}};
    if (r.long_short) row["long_short"] = {r.long_short->first, r.long_short->second};
    maxp.push_back(row);
  }
  doc["maximal_parabolics"] = maxp;

  json grad = json::array();
  for (const auto& r : grading_table()) {
    json disp = json::object();
    for (auto [k, d] : r.displayed) disp[std::to_string(k)] = d;
    grad.push_back({{"form", r.form}, {"tabulated_index", r.tabulated_index}, {"j", r.j},
                    {"stated_grading", r.stated_grading}, {"displayed", disp},
                    {"note", r.note}});
  }
  doc["gradings"] = grad;

  json related = json::array();
  for (const auto& r : related_table()) {
    json members = json::array();
    for (const auto& m : r.members) members.push_back({{"form", m.form}, {"levi", m.levi}});
    related.push_back({{"row", r.row}, {"members", members}, {"dim_n", r.dim_n}});
  }
  doc["related_classes"] = related;

  json interp = json::array();
  for (const auto& r : interpretation_table()) {
    json members = json::array();
    for (const auto& m : r.members) {
      json fr = json::array(), lr = json::array();
      for (const auto& s : m.form_roles) fr.push_back(role_json(s));
      for (const auto& s : m.levi_roles) lr.push_back(role_json(s));
      members.push_back(
          {{"form", m.form}, {"levi", m.levi}, {"form_roles", fr}, {"levi_roles", lr}});
    }
    interp.push_back({{"row", r.row}, {"members", members}});
  }
  doc["jordan_roles"] = interp;

  json t1 = json::array();
  for (const auto& r : table1_rows())
    t1.push_back({{"row", r.row}, {"aut", r.aut}, {"str0", r.str0}, {"conf", r.conf},
                  {"qconf", r.qconf}});
  doc["table1"] = t1;
  return doc;
}

json registry_document() { return registry_document(registry()); }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::kInconsistent, "SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string registry_hash(const std::vector<RealForm>& forms) {
  return sha256_hex(registry_document(forms).dump());
}

std::string registry_hash() {
  static const std::string h = registry_hash(registry());
  return h;
}

}  // namespace exlie
