#include "flagorbits/jsonio.hpp"

namespace flagorbits {

json flag_to_json(const Flag& f) {
  json basis = json::array();
  for (int j = 0; j < f.n(); ++j) {
    json col = json::array();
    for (int i = 0; i < f.n(); ++i) col.push_back(f.basis().at(i, j).render());
    basis.push_back(std::move(col));
  }
  return json{{"n", f.n()}, {"basis", std::move(basis)}};
}

Flag flag_from_json(const json& j, const TowerPtr& tower) {
  int n = j.at("n").get<int>();
  const json& basis = j.at("basis");
  if (static_cast<int>(basis.size()) != n)
    throw std::runtime_error("flag basis must have n columns");
  std::vector<std::vector<Scalar>> cols;
  for (const json& col : basis) {
    if (static_cast<int>(col.size()) != n)
      throw std::runtime_error("flag basis columns must have n entries");
    std::vector<Scalar> v;
    for (const json& entry : col) v.push_back(Scalar::parse(entry.get<std::string>(), tower));
    cols.push_back(std::move(v));
  }
  return Flag(Matrix::from_columns(cols, tower));
}

json clan_to_json(const Clan& c) {
  json arcs = json::array();
  for (const auto& [a, b] : c.arcs) arcs.push_back(json::array({a, b}));
  json signs = json::object();
  for (const auto& [k, s] : c.signs) signs[std::to_string(k)] = s;
  return json{{"n", c.n}, {"arcs", std::move(arcs)}, {"signs", std::move(signs)}};
}

Clan clan_from_json(const json& j) {
  Clan c;
  c.n = j.at("n").get<int>();
  if (j.contains("arcs"))
    for (const json& arc : j.at("arcs"))
      c.arcs.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
  std::sort(c.arcs.begin(), c.arcs.end());
  if (j.contains("signs"))
    for (auto it = j.at("signs").begin(); it != j.at("signs").end(); ++it)
      c.signs[std::stoi(it.key())] = it.value().get<int>();
  c.validate();
  return c;
}

json orbit_param_to_json(const OrbitParam& p) {
  json j = clan_to_json(p.clan);
  j["family"] = family_name(p.family);
  j["type"] = type_name(p.type);
  return j;
}

OrbitParam orbit_param_from_json(const json& j) {
  OrbitParam p;
  p.clan = clan_from_json(j);
  std::string fam = j.at("family").get<std::string>();
  if (fam != "K" && fam != "G0") throw std::runtime_error("family must be K or G0");
  p.family = fam == "K" ? Family::K_side : Family::G0_side;
  auto type = type_from_name(j.at("type").get<std::string>());
  if (!type) throw std::runtime_error("unknown type tag");
  p.type = *type;
  return p;
}

namespace {

std::string block_name(int b) { return b == 1 ? "B1" : "B2"; }

int block_from_name(const std::string& s) {
  if (s == "B1") return 1;
  if (s == "B2") return 2;
  throw std::runtime_error("block must be B1 or B2");
}

std::vector<int> signs_from_string(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c != '+' && c != '-') throw std::runtime_error("signs must be over {+,-}");
    out.push_back(c == '+' ? 1 : -1);
  }
  return out;
}

std::string signs_to_string(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += x > 0 ? '+' : '-';
  return s;
}

}  // namespace

json setup_to_json(const SpaceSetup& s) {
  json j{{"type", type_name(s.type)}, {"n", s.n}};
  if (s.has_omega()) {
    json blocks = json::array();
    for (int b : s.blocks) blocks.push_back(block_name(b));
    j["blocks"] = std::move(blocks);
  }
  if (s.has_phi()) j["signs"] = signs_to_string(s.signs);
  return j;
}

SpaceSetup setup_from_json(const json& j) {
  auto type = type_from_name(j.at("type").get<std::string>());
  if (!type) throw std::runtime_error("unknown type tag");
  int n = j.at("n").get<int>();
  std::vector<int> blocks;
  if (j.contains("blocks"))
    for (const json& b : j.at("blocks")) blocks.push_back(block_from_name(b.get<std::string>()));
  std::vector<int> signs;
  if (j.contains("signs")) signs = signs_from_string(j.at("signs").get<std::string>());
  return SpaceSetup::make(*type, n, std::move(blocks), std::move(signs));
}

namespace {

// tail descriptors carry an optional trailing '*' ("B1*", "+-*")
std::string strip_star(std::string s) {
  if (!s.empty() && s.back() == '*') s.pop_back();
  return s;
}

}  // namespace

json ind_setup_to_json(const IndSetup& s) {
  json j{{"type", type_name(s.type)}};
  if (s.has_blocks()) {
    json prefix = json::array();
    for (int b : s.omega_prefix) prefix.push_back(block_name(b));
    j["omega_prefix"] = std::move(prefix);
    j["omega_tail"] = block_name(s.omega_tail) + "*";
  }
  if (s.has_signs()) {
    j["signs_prefix"] = s.signs_prefix;
    j["signs_tail"] = s.signs_tail + "*";
  }
  json order{{"family", order_family_name(s.order.family)}};
  if (!s.order.prefix_perm.empty()) order["prefix_perm"] = s.order.prefix_perm;
  j["order"] = std::move(order);
  j["horizon"] = s.horizon;
  return j;
}

IndSetup ind_setup_from_json(const json& j) {
  auto type = type_from_name(j.at("type").get<std::string>());
  if (!type) throw std::runtime_error("unknown type tag");
  std::vector<int> prefix;
  int tail = 0;
  if (j.contains("omega_prefix"))
    for (const json& b : j.at("omega_prefix"))
      prefix.push_back(block_from_name(b.get<std::string>()));
  if (j.contains("omega_tail"))
    tail = block_from_name(strip_star(j.at("omega_tail").get<std::string>()));
  std::string sprefix, stail;
  if (j.contains("signs_prefix")) sprefix = j.at("signs_prefix").get<std::string>();
  if (j.contains("signs_tail")) stail = strip_star(j.at("signs_tail").get<std::string>());
  OrderSpec order;
  if (j.contains("order")) {
    const json& o = j.at("order");
    auto fam = order_family_from_name(o.at("family").get<std::string>());
    if (!fam) throw std::runtime_error("unknown order family");
    order.family = *fam;
    if (o.contains("prefix_perm"))
      for (const json& v : o.at("prefix_perm")) order.prefix_perm.push_back(v.get<int>());
  }
  int horizon = j.value("horizon", 64);
  return IndSetup::make(*type, std::move(prefix), tail, std::move(sprefix), std::move(stail),
                        std::move(order), horizon);
}

json ind_param_to_json(const IndParam& p) {
  return json{{"window", p.window},
              {"core", clan_to_json(p.core)},
              {"tail", p.tail == TailRule::Iota ? "iota" : "id_signs"},
              {"family", family_name(p.family)},
              {"type", type_name(p.type)}};
}

json criterion_to_json(const CriterionResult& r) {
  json v;
  if (r.verdict == Verdict::Yes)
    v = true;
  else if (r.verdict == Verdict::No)
    v = false;
  else
    v = verdict_name(r.verdict);
  return json{{"verdict", std::move(v)}, {"clause", r.clause}, {"reason", r.reason}};
}

}  // namespace flagorbits
